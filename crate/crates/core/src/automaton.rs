use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::letters::{classify, DefectInfo, LetterClass};
use crate::{Error, Partition, Result, Transformation};

/// A state index in `0..n`.
pub type State = usize;

/// A finite word over an automaton's alphabet, stored as letter indices.
/// The empty word is ε.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn push(&mut self, letter: usize) {
        self.0.push(letter);
    }

    /// Appends `other` in place.
    pub fn extend_with(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.extend_with(other);
        w
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl FromIterator<usize> for Word {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// The two conditions that together make a word compatible with a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompatibilityConditions {
    /// Every class is sent to a single state.
    pub classes_synchronized: bool,
    /// Different classes are sent to different states.
    pub images_distinct: bool,
}

impl CompatibilityConditions {
    pub fn holds(&self) -> bool {
        self.classes_synchronized && self.images_distinct
    }
}

/// A deterministic automaton `(Q, Σ, δ)` without initial or final states.
///
/// Letter classifications are computed once at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    n: usize,
    names: Vec<String>,
    rows: Vec<Transformation>,
    classes: Vec<LetterClass>,
}

impl Automaton {
    /// Builds an automaton on `n` states from `(name, row)` pairs, where
    /// `row[q]` is the 0-based image of `q` under that letter.
    pub fn new<S: Into<String>>(n: usize, letters: Vec<(S, Vec<usize>)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoStates);
        }
        let mut names: Vec<String> = Vec::with_capacity(letters.len());
        let mut rows = Vec::with_capacity(letters.len());
        for (name, row) in letters {
            let name = name.into();
            if name.is_empty()
                || name.starts_with('#')
                || name.chars().any(|c| c.is_whitespace() || c == ':')
            {
                return Err(Error::BadLetterName(name));
            }
            if names.contains(&name) {
                return Err(Error::DuplicateLetter(name));
            }
            if row.len() != n {
                return Err(Error::RowLength {
                    letter: name,
                    expected: n,
                    found: row.len(),
                });
            }
            if let Some((state, &target)) = row.iter().enumerate().find(|(_, &t)| t >= n) {
                return Err(Error::TargetOutOfRange {
                    letter: name,
                    state,
                    target,
                    n,
                });
            }
            names.push(name);
            rows.push(Transformation::new_unchecked(row));
        }
        let classes = rows.iter().map(classify).collect();
        Ok(Automaton {
            n,
            names,
            rows,
            classes,
        })
    }

    pub fn num_states(&self) -> usize {
        self.n
    }

    pub fn num_letters(&self) -> usize {
        self.names.len()
    }

    pub fn letter_name(&self, letter: usize) -> &str {
        &self.names[letter]
    }

    pub fn letter_names(&self) -> &[String] {
        &self.names
    }

    pub fn letter_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Transformation of a single letter.
    pub fn letter(&self, letter: usize) -> &Transformation {
        &self.rows[letter]
    }

    pub fn letter_class(&self, letter: usize) -> &LetterClass {
        &self.classes[letter]
    }

    /// Letters acting as permutations, in declaration order.
    pub fn permutation_letters(&self) -> Vec<usize> {
        self.classes
            .iter()
            .enumerate()
            .filter_map(|(i, c)| matches!(c, LetterClass::Permutation).then_some(i))
            .collect()
    }

    /// Letters of deficiency 1 with their defect data, in declaration order.
    pub fn defect_letters(&self) -> Vec<(usize, DefectInfo)> {
        self.classes
            .iter()
            .enumerate()
            .filter_map(|(i, c)| match c {
                LetterClass::OneDefect(info) => Some((i, *info)),
                _ => None,
            })
            .collect()
    }

    /// Checks that every letter index of `w` exists.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|&&l| l >= self.names.len()) {
            Some(&index) => Err(Error::LetterOutOfRange {
                index,
                count: self.names.len(),
            }),
            None => Ok(()),
        }
    }

    /// Builds a word from letter names.
    pub fn word_from_names<'a, I: IntoIterator<Item = &'a str>>(&self, names: I) -> Option<Word> {
        names.into_iter().map(|n| self.letter_index(n)).collect()
    }

    /// `q · w`.
    pub fn apply(&self, w: &Word, q: State) -> State {
        w.letters().iter().fold(q, |q, &a| self.rows[a].apply(q))
    }

    /// The transformation of `w`; the identity for ε.
    pub fn transformation_of(&self, w: &Word) -> Transformation {
        Transformation::new_unchecked((0..self.n).map(|q| self.apply(w, q)).collect())
    }

    /// `P · w` as a sorted, duplicate-free list.
    pub fn image_set(&self, w: &Word, states: &[State]) -> Vec<State> {
        let mut hit = vec![false; self.n];
        for &p in states {
            hit[self.apply(w, p)] = true;
        }
        hit.iter()
            .enumerate()
            .filter_map(|(q, &h)| h.then_some(q))
            .collect()
    }

    pub fn rank(&self, w: &Word) -> usize {
        self.transformation_of(w).rank()
    }

    pub fn kernel(&self, w: &Word) -> Partition {
        self.transformation_of(w).kernel()
    }

    /// `w` is compatible with `rho` iff `ker(w) = rho`.
    pub fn is_compatible(&self, w: &Word, rho: &Partition) -> bool {
        rho.len() == self.n && self.kernel(w) == *rho
    }

    /// Evaluates compatibility class by class instead of through the kernel.
    pub fn compatibility_conditions(&self, w: &Word, rho: &Partition) -> CompatibilityConditions {
        if rho.len() != self.n {
            return CompatibilityConditions {
                classes_synchronized: false,
                images_distinct: false,
            };
        }
        let mut class_image = vec![usize::MAX; rho.num_classes()];
        let mut classes_synchronized = true;
        for q in 0..self.n {
            let t = self.apply(w, q);
            let slot = &mut class_image[rho.class_of(q)];
            if *slot == usize::MAX {
                *slot = t;
            } else if *slot != t {
                classes_synchronized = false;
            }
        }
        // With unsynchronized classes the "image" above is just a representative,
        // so distinctness is judged on full image sets instead.
        let images_distinct = if classes_synchronized {
            let mut used = vec![false; self.n];
            class_image
                .iter()
                .all(|&t| !core::mem::replace(&mut used[t], true))
        } else {
            let images: Vec<Vec<State>> = rho
                .classes()
                .iter()
                .map(|class| self.image_set(w, class))
                .collect();
            images
                .iter()
                .enumerate()
                .all(|(i, a)| images[i + 1..].iter().all(|b| a != b))
        };
        CompatibilityConditions {
            classes_synchronized,
            images_distinct,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{automaton_t, cerny};
    use alloc::vec;

    fn w(t: &Automaton, s: &str) -> Word {
        t.word_from_names(s.split("").filter(|s| !s.is_empty()))
            .unwrap()
    }

    #[test]
    fn rejects_invalid_tables() {
        assert_eq!(Automaton::new::<&str>(0, vec![]), Err(Error::NoStates));
        assert!(matches!(
            Automaton::new(2, vec![("a", vec![0, 1]), ("a", vec![1, 0])]),
            Err(Error::DuplicateLetter(_))
        ));
        assert!(matches!(
            Automaton::new(3, vec![("a", vec![0, 1])]),
            Err(Error::RowLength {
                expected: 3,
                found: 2,
                ..
            })
        ));
        assert!(matches!(
            Automaton::new(3, vec![("a", vec![0, 1, 4])]),
            Err(Error::TargetOutOfRange {
                state: 2,
                target: 4,
                ..
            })
        ));
        assert!(matches!(
            Automaton::new(1, vec![("a b", vec![0])]),
            Err(Error::BadLetterName(_))
        ));
    }

    #[test]
    fn word_action_on_t() {
        let t = automaton_t();
        assert_eq!(t.apply(&Word::empty(), 1), 1);
        // 1-based: 1 · c = 2
        assert_eq!(t.apply(&w(&t, "c"), 0), 1);
        // 3 · tct = 1
        assert_eq!(t.apply(&w(&t, "tct"), 2), 0);
        assert_eq!(
            t.transformation_of(&Word::empty()),
            Transformation::identity(3)
        );
        assert_eq!(t.transformation_of(&w(&t, "t")).as_slice(), &[0, 0, 2]);
    }

    #[test]
    fn image_sets() {
        let t = automaton_t();
        assert_eq!(t.image_set(&w(&t, "t"), &[0, 1, 2]), [0, 2]);
        assert_eq!(t.image_set(&Word::empty(), &[2, 0]), [0, 2]);
        let c4 = cerny(4).unwrap();
        assert_eq!(c4.transformation_of(&w(&c4, "b")).as_slice(), &[1, 1, 2, 3]);
        // {1,3} · ba = {3,4}
        assert_eq!(c4.image_set(&w(&c4, "ba"), &[0, 2]), [2, 3]);
    }

    #[test]
    fn kernels_and_compatibility() {
        let t = automaton_t();
        assert_eq!(t.kernel(&w(&t, "ct")), Partition::from_labels(&[0, 1, 0]));
        assert_eq!(t.kernel(&w(&t, "cct")), Partition::from_labels(&[0, 1, 1]));
        assert_eq!(t.kernel(&w(&t, "tct")), Partition::full(3));

        let r12 = Partition::from_labels(&[0, 0, 1]);
        assert!(t.is_compatible(&w(&t, "t"), &r12));
        assert!(!t.is_compatible(&w(&t, "c"), &r12));
        assert!(!t.is_compatible(&w(&t, "t"), &Partition::discrete(3)));
        assert!(!t.is_compatible(&w(&t, "t"), &Partition::discrete(4)));

        let cond = t.compatibility_conditions(&w(&t, "c"), &r12);
        assert!(!cond.classes_synchronized);
        assert!(cond.images_distinct);
        let cond = t.compatibility_conditions(&w(&t, "t"), &Partition::discrete(3));
        assert!(cond.classes_synchronized && !cond.images_distinct);
    }

    #[test]
    fn single_state_automaton() {
        let a = Automaton::new(1, vec![("a", vec![0])]).unwrap();
        assert!(a.is_compatible(&Word::empty(), &Partition::full(1)));
        assert_eq!(Partition::full(1), Partition::discrete(1));
    }

    #[test]
    fn check_word_bounds() {
        let t = automaton_t();
        assert!(t.check_word(&Word::from(vec![0, 1])).is_ok());
        assert_eq!(
            t.check_word(&Word::from(vec![2])),
            Err(Error::LetterOutOfRange { index: 2, count: 2 })
        );
    }
}
