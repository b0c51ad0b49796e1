//! Text formats at the IO boundary. All state labels are 1-based here.
//!
//! Automaton files use a line format
//!
//! ```text
//! # the automaton T
//! states: 3
//! letters: c t
//! c: 2 3 1
//! t: 1 1 3
//! ```
//!
//! or, interchangeably, a JSON object `{"states": 3, "letters": {"c": [2, 3, 1], "t": [1, 1, 3]}}`
//! whose letter order is the key order of the document.

use std::fmt;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::Deserialize;
use tcomp_core::{Automaton, Partition, Word};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("invalid automaton: {0}")]
    Validation(String),
    #[error("invalid partition `{text}`: {reason}")]
    Partition { text: String, reason: String },
}

fn parse_err(line: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        reason: reason.into(),
    }
}

/// Parses either the line format or the JSON format, chosen by the first
/// non-blank character.
pub fn parse_automaton(text: &str) -> Result<Automaton, FormatError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_lines(text)
    }
}

fn parse_header<'a>(line: (usize, &'a str), key: &str) -> Result<&'a str, FormatError> {
    let (no, text) = line;
    match text.split_once(':') {
        Some((k, rest)) if k.trim() == key => Ok(rest),
        _ => Err(parse_err(no, format!("expected `{key}:`"))),
    }
}

fn parse_lines(text: &str) -> Result<Automaton, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let last_line = text.lines().count().max(1);

    let header = lines
        .next()
        .ok_or_else(|| parse_err(last_line, "missing `states:` line"))?;
    let n_text = parse_header(header, "states")?.trim();
    let n: usize = n_text
        .parse()
        .map_err(|_| parse_err(header.0, format!("`{n_text}` is not a state count")))?;
    if n == 0 {
        return Err(parse_err(header.0, "an automaton needs at least one state"));
    }

    let decl = lines
        .next()
        .ok_or_else(|| parse_err(last_line, "missing `letters:` line"))?;
    let names: Vec<&str> = parse_header(decl, "letters")?.split_whitespace().collect();
    for (i, name) in names.iter().enumerate() {
        if names[..i].contains(name) {
            return Err(parse_err(decl.0, format!("duplicate letter `{name}`")));
        }
    }

    let mut rows: Vec<Option<(usize, Vec<usize>)>> = vec![None; names.len()];
    for (no, line) in lines {
        let (name, rest) = line
            .split_once(':')
            .ok_or_else(|| parse_err(no, "expected `<letter>: <targets>`"))?;
        let name = name.trim();
        let slot = names
            .iter()
            .position(|&l| l == name)
            .ok_or_else(|| parse_err(no, format!("undeclared letter `{name}`")))?;
        if rows[slot].is_some() {
            return Err(parse_err(no, format!("second row for letter `{name}`")));
        }
        let row = rest
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| parse_err(no, format!("`{t}` is not a state")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(parse_err(
                no,
                format!("row of `{name}` has {} entries, expected {n}", row.len()),
            ));
        }
        rows[slot] = Some((no, row));
    }

    let mut letters = Vec::with_capacity(names.len());
    for (name, row) in names.iter().zip(rows) {
        let (no, row) =
            row.ok_or_else(|| parse_err(last_line, format!("no row for letter `{name}`")))?;
        letters.push((name.to_string(), to_zero_based(name, &row, n, Some(no))?));
    }
    Automaton::new(n, letters).map_err(|e| FormatError::Validation(e.to_string()))
}

fn to_zero_based(
    name: &str,
    row: &[usize],
    n: usize,
    line: Option<usize>,
) -> Result<Vec<usize>, FormatError> {
    row.iter()
        .enumerate()
        .map(|(q, &t)| {
            if (1..=n).contains(&t) {
                Ok(t - 1)
            } else {
                let at = line.map(|l| format!("line {l}: ")).unwrap_or_default();
                Err(FormatError::Validation(format!(
                    "{at}letter `{name}` sends state {} to {t}, outside 1..={n}",
                    q + 1
                )))
            }
        })
        .collect()
}

struct OrderedRows(Vec<(String, Vec<usize>)>);

impl<'de> Deserialize<'de> for OrderedRows {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct RowsVisitor;
        impl<'de> Visitor<'de> for RowsVisitor {
            type Value = OrderedRows;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object mapping letter names to rows")
            }
            fn visit_map<M: MapAccess<'de>>(self, mut map: M) -> Result<OrderedRows, M::Error> {
                let mut rows: Vec<(String, Vec<usize>)> = Vec::new();
                while let Some((name, row)) = map.next_entry::<String, Vec<usize>>()? {
                    if rows.iter().any(|(n, _)| *n == name) {
                        return Err(de::Error::custom(format!("duplicate letter `{name}`")));
                    }
                    rows.push((name, row));
                }
                Ok(OrderedRows(rows))
            }
        }
        d.deserialize_map(RowsVisitor)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonAutomaton {
    states: usize,
    letters: OrderedRows,
}

fn parse_json(text: &str) -> Result<Automaton, FormatError> {
    let doc: JsonAutomaton =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    let n = doc.states;
    if n == 0 {
        return Err(FormatError::Validation(
            "an automaton needs at least one state".into(),
        ));
    }
    let mut letters = Vec::with_capacity(doc.letters.0.len());
    for (name, row) in doc.letters.0 {
        if row.len() != n {
            return Err(FormatError::Validation(format!(
                "row of `{name}` has {} entries, expected {n}",
                row.len()
            )));
        }
        let row = to_zero_based(&name, &row, n, None)?;
        letters.push((name, row));
    }
    Automaton::new(n, letters).map_err(|e| FormatError::Validation(e.to_string()))
}

fn one_based_row(a: &Automaton, letter: usize) -> impl Iterator<Item = usize> + '_ {
    a.letter(letter).as_slice().iter().map(|&t| t + 1)
}

/// Serializes to the line format.
pub fn write_automaton(a: &Automaton) -> String {
    let mut out = format!(
        "states: {}\nletters: {}\n",
        a.num_states(),
        a.letter_names().join(" ")
    );
    for l in 0..a.num_letters() {
        let row: Vec<String> = one_based_row(a, l).map(|t| t.to_string()).collect();
        out.push_str(&format!("{}: {}\n", a.letter_name(l), row.join(" ")));
    }
    out
}

/// Serializes to the JSON format (letters in declaration order).
pub fn write_automaton_json(a: &Automaton) -> String {
    let letters: Vec<String> = (0..a.num_letters())
        .map(|l| {
            let row: Vec<String> = one_based_row(a, l).map(|t| t.to_string()).collect();
            format!(
                "{}: [{}]",
                serde_json::to_string(a.letter_name(l)).unwrap(),
                row.join(", ")
            )
        })
        .collect();
    format!(
        "{{\"states\": {}, \"letters\": {{{}}}}}\n",
        a.num_states(),
        letters.join(", ")
    )
}

/// Parses `1,3|2`-style partitions of `n` states. Whitespace is ignored and
/// every state must appear exactly once.
pub fn parse_partition(text: &str, n: usize) -> Result<Partition, FormatError> {
    let bad = |reason: String| FormatError::Partition {
        text: text.to_string(),
        reason,
    };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut classes = Vec::new();
    for class in compact.split('|') {
        if class.is_empty() {
            return Err(bad("empty class".into()));
        }
        let states = class
            .split(',')
            .map(|s| match s.parse::<usize>() {
                Ok(q) if (1..=n).contains(&q) => Ok(q - 1),
                _ => Err(bad(format!("`{s}` is not a state in 1..={n}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        classes.push(states);
    }
    Partition::from_classes(n, &classes)
        .ok_or_else(|| bad(format!("every state of 1..={n} must appear exactly once")))
}

/// Letter names concatenated when all are single characters, space-separated
/// otherwise. ε is the empty string.
pub fn format_word(a: &Automaton, w: &Word) -> String {
    let names = w.letters().iter().map(|&l| a.letter_name(l));
    if a.letter_names().iter().all(|n| n.chars().count() == 1) {
        names.collect()
    } else {
        names.collect::<Vec<_>>().join(" ")
    }
}

/// [`format_word`], with ε spelled out for human-readable output.
pub fn display_word(a: &Automaton, w: &Word) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        format_word(a, w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tcomp_core::families;

    const T_FILE: &str = "# automaton T\nstates: 3\nletters: c t\nc: 2 3 1\nt: 1 1 3\n";

    #[test]
    fn parses_t() {
        assert_eq!(parse_automaton(T_FILE).unwrap(), families::automaton_t());
        let json = r#"{"states": 3, "letters": {"c": [2, 3, 1], "t": [1, 1, 3]}}"#;
        assert_eq!(parse_automaton(json).unwrap(), families::automaton_t());
    }

    #[test]
    fn json_keeps_document_order() {
        let json = r#"{"states": 3, "letters": {"t": [1, 1, 3], "c": [2, 3, 1]}}"#;
        let a = parse_automaton(json).unwrap();
        assert_eq!(a.letter_names(), ["t", "c"]);
    }

    #[test]
    fn rows_may_come_in_any_order() {
        let text = "states: 3\nletters: c t\n\nt: 1 1 3\nc: 2 3 1\n";
        assert_eq!(parse_automaton(text).unwrap(), families::automaton_t());
    }

    #[test]
    fn wrong_row_length_is_a_parse_error() {
        let text = "states: 3\nletters: c\nc: 2 3\n";
        match parse_automaton(text) {
            Err(FormatError::Parse { line: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn out_of_range_target_is_a_validation_error() {
        let text = "states: 3\nletters: c\nc: 2 5 1\n";
        assert!(matches!(
            parse_automaton(text),
            Err(FormatError::Validation(_))
        ));
        let text = "states: 3\nletters: c\nc: 0 1 2\n";
        assert!(matches!(
            parse_automaton(text),
            Err(FormatError::Validation(_))
        ));
        let json = r#"{"states": 3, "letters": {"c": [2, 5, 1]}}"#;
        assert!(matches!(
            parse_automaton(json),
            Err(FormatError::Validation(_))
        ));
    }

    #[test]
    fn line_anchored_errors() {
        let cases = [
            ("letters: c\n", 1),
            ("states: x\n", 1),
            ("states: 2\nletters: a a\n", 2),
            ("states: 2\nletters: a\nb: 1 2\n", 3),
            ("states: 2\nletters: a\na: 1 2\na: 2 1\n", 4),
            ("states: 2\nletters: a\na 1 2\n", 3),
            ("states: 2\nletters: a\na: 1 z\n", 3),
            ("states: 2\nletters: a b\na: 1 2\n", 3),
        ];
        for (text, line) in cases {
            match parse_automaton(text) {
                Err(FormatError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        let json = "{\"states\": 2,\n\"letters\": {\"a\": [1, 2], \"a\": [2, 1]}}";
        assert!(matches!(
            parse_automaton(json),
            Err(FormatError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn writes_both_formats() {
        let t = families::automaton_t();
        assert_eq!(
            write_automaton(&t),
            "states: 3\nletters: c t\nc: 2 3 1\nt: 1 1 3\n"
        );
        assert_eq!(
            write_automaton_json(&t),
            "{\"states\": 3, \"letters\": {\"c\": [2, 3, 1], \"t\": [1, 1, 3]}}\n"
        );
    }

    #[test]
    fn partitions() {
        assert_eq!(
            parse_partition(" 1, 3 | 2 ", 3).unwrap(),
            Partition::from_labels(&[0, 1, 0])
        );
        assert!(parse_partition("123", 3).is_err());
        assert!(parse_partition("1,2", 3).is_err());
        assert!(parse_partition("1,2|2,3", 3).is_err());
        assert!(parse_partition("1||2,3", 3).is_err());
        assert!(parse_partition("1,4|2,3", 3).is_err());
        assert_eq!(parse_partition("1,2,3", 3).unwrap(), Partition::full(3));
    }

    #[test]
    fn word_formatting() {
        let t = families::automaton_t();
        let w = t.word_from_names(["t", "c", "t"]).unwrap();
        assert_eq!(format_word(&t, &w), "tct");
        assert_eq!(display_word(&t, &Word::empty()), "ε");
        let p = families::pair_merge(3).unwrap();
        assert_eq!(format_word(&p, &Word::from(vec![0, 2])), "t1_2 t2_3");
    }
}
