//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use tcomp::bench::{self, BenchConfig, BenchFamily};
use tcomp_core::oracle::{self, DEFAULT_CAP};
use tcomp_core::pairgraph::decide_totally_compatible;
use tcomp_core::synth::{self, length_bound};
use tcomp_core::{all_partitions, bell_number, families, Automaton, Partition, StatePair};

struct Report {
    failures: usize,
}

impl Report {
    fn check(&mut self, id: &str, ok: bool, detail: String) {
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {id}: {detail}");
        if !ok {
            self.failures += 1;
        }
    }

    fn note(&self, detail: String) {
        println!("[NOTE] {detail}");
    }
}

struct Sample {
    label: String,
    automaton: Automaton,
    tc: bool,
}

/// Every table of `k` letters over `n` states, letters named a, b, ...
fn all_tables(n: usize, k: usize) -> Vec<Automaton> {
    let maps = n.pow(n as u32);
    let total = maps.pow(k as u32);
    (0..total)
        .map(|mut code| {
            let letters = (0..k)
                .map(|i| {
                    let mut m = code % maps;
                    code /= maps;
                    let row = (0..n)
                        .map(|_| {
                            let t = m % n;
                            m /= n;
                            t
                        })
                        .collect();
                    (families::letter_name(i), row)
                })
                .collect();
            Automaton::new(n, letters).unwrap()
        })
        .collect()
}

fn table_one(r: &mut Report) {
    let t = families::automaton_t();
    let expected: [(&str, &[&[usize]]); 5] = [
        ("c", &[&[0], &[1], &[2]]),
        ("t", &[&[0, 1], &[2]]),
        ("ct", &[&[0, 2], &[1]]),
        ("cct", &[&[0], &[1, 2]]),
        ("tct", &[&[0, 1, 2]]),
    ];
    let words: Vec<_> = expected
        .iter()
        .map(|(w, _)| {
            t.word_from_names((0..w.len()).map(|i| &w[i..i + 1]))
                .unwrap()
        })
        .collect();
    let start = Instant::now();
    let kernels: Vec<Partition> = words.iter().map(|w| t.kernel(w)).collect();
    let elapsed = start.elapsed();
    let mismatches: Vec<String> = expected
        .iter()
        .zip(&kernels)
        .filter(|((_, classes), k)| Partition::from_classes(3, classes).as_ref() != Some(*k))
        .map(|((w, _), k)| format!("{w} -> {k}"))
        .collect();
    r.check(
        "1 kernels of c, t, ct, cct, tct",
        mismatches.is_empty() && elapsed < Duration::from_millis(1),
        format!(
            "{} mismatches {:?}, {:.1} us",
            mismatches.len(),
            mismatches,
            elapsed.as_secs_f64() * 1e6
        ),
    );
}

fn automaton_t(r: &mut Report) {
    let t = families::automaton_t();
    let decided = decide_totally_compatible(&t).is_totally_compatible();
    let rows = synth::witness_table(&t, synth::DEFAULT_PARTITION_CAP).unwrap();
    let verified = rows
        .iter()
        .filter(|row| matches!(&row.word, Ok(w) if t.kernel(w) == row.partition))
        .count();
    r.check(
        "2 T decided and witness table",
        decided && rows.len() == 5 && verified == 5 && bell_number(3) == 5,
        format!("decide={decided}, {verified}/{} rows verified", rows.len()),
    );
}

fn cerny_not_tc(r: &mut Report) {
    let pair13 = StatePair::new(0, 2).unwrap();
    let bad: Vec<usize> = (4..=64)
        .filter(|&n| {
            let d = decide_totally_compatible(&families::cerny(n).unwrap());
            d.is_totally_compatible() || !d.witness_pairs().contains(&pair13)
        })
        .collect();
    let oracle_ok = [4, 5].iter().all(|&n| {
        !oracle::oracle_totally_compatible(&families::cerny(n).unwrap(), DEFAULT_CAP)
            .unwrap()
            .totally_compatible
    });
    let missing = oracle::oracle_totally_compatible(&families::cerny(4).unwrap(), DEFAULT_CAP)
        .unwrap()
        .missing;
    let p13 = Partition::from_classes(4, &[&[0, 2][..], &[1], &[3]]).unwrap();
    let has13 = missing.contains(&p13);
    r.check(
        "3 Cerny n=4..64 not TC",
        bad.is_empty() && oracle_ok && has13,
        format!(
            "failing n {bad:?}, oracle agrees at 4,5: {oracle_ok}, {p13} missing at n=4: {has13} ({} missing)",
            missing.len()
        ),
    );
    for n in [2, 3] {
        let c = families::cerny(n).unwrap();
        let verdict = oracle::oracle_totally_compatible(&c, DEFAULT_CAP).unwrap();
        r.note(format!(
            "Cerny n={n}: oracle totally compatible = {}, decision = {}",
            verdict.totally_compatible,
            decide_totally_compatible(&c).is_totally_compatible()
        ));
    }
}

fn cerny_reachable(r: &mut Report) {
    let bad: Vec<usize> = (2..=5)
        .filter(|&n| {
            !oracle::oracle_completely_reachable(&families::cerny(n).unwrap(), DEFAULT_CAP).unwrap()
        })
        .collect();
    r.check(
        "4 Cerny n=2..5 completely reachable",
        bad.is_empty(),
        format!("not reachable at {bad:?}"),
    );
}

fn corpus() -> Vec<Sample> {
    let mut out = Vec::new();
    let mut push = |label: String, a: Automaton| {
        let tc = decide_totally_compatible(&a).is_totally_compatible();
        out.push(Sample {
            label,
            automaton: a,
            tc,
        });
    };
    for n in 1..=3 {
        for k in 0..=2 {
            for (i, a) in all_tables(n, k).into_iter().enumerate() {
                push(format!("table n={n} k={k} #{i}"), a);
            }
        }
    }
    for n in [4, 5] {
        for k in [2, 3, 4] {
            for seed in 0..1000 {
                push(
                    format!("random {n} {k} {seed}"),
                    families::random_automaton(n, k, seed).unwrap(),
                );
            }
        }
    }
    out
}

fn main() -> ExitCode {
    let mut r = Report { failures: 0 };
    table_one(&mut r);
    automaton_t(&mut r);
    cerny_not_tc(&mut r);
    cerny_reachable(&mut r);

    let start = Instant::now();
    let samples = corpus();
    let mut disagreements = Vec::new();
    let mut not_sync = Vec::new();
    for s in &samples {
        let census = oracle::enumerate_monoid(&s.automaton, DEFAULT_CAP).unwrap();
        let n = s.automaton.num_states();
        if oracle::totally_compatible_in(&census, n).totally_compatible != s.tc {
            disagreements.push(s.label.clone());
        }
        if s.tc && oracle::reset_word_in(&census).is_none() {
            not_sync.push(s.label.clone());
        }
    }
    let elapsed = start.elapsed();
    let tc_count = samples.iter().filter(|s| s.tc).count();
    r.check(
        "5 decision equals oracle",
        disagreements.is_empty() && elapsed < Duration::from_secs(120),
        format!(
            "{} automata, {} disagreements {:?}, {tc_count} TC, {:.2} s",
            samples.len(),
            disagreements.len(),
            &disagreements[..disagreements.len().min(5)],
            elapsed.as_secs_f64()
        ),
    );

    let mut synth_failures = Vec::new();
    let mut words = 0usize;
    for s in samples.iter().filter(|s| s.tc) {
        let a = &s.automaton;
        let n = a.num_states();
        for rho in all_partitions(n) {
            words += 1;
            match synth::synthesize(a, &rho) {
                Ok(w) if a.kernel(&w) == rho && w.len() <= length_bound(n) => {}
                _ => synth_failures.push(format!("{} {rho}", s.label)),
            }
        }
    }
    r.check(
        "6 synthesis soundness",
        synth_failures.is_empty(),
        format!(
            "{words} words checked, {} failures {:?}",
            synth_failures.len(),
            &synth_failures[..synth_failures.len().min(5)]
        ),
    );

    let counterexamples: Vec<&str> = samples
        .iter()
        .filter(|s| s.tc && s.automaton.num_states() > 3 && s.automaton.num_letters() <= 2)
        .map(|s| s.label.as_str())
        .collect();
    let checked = samples
        .iter()
        .filter(|s| s.automaton.num_states() > 3 && s.automaton.num_letters() <= 2)
        .count();
    r.check(
        "7 no TC automaton with n > 3 and two letters",
        counterexamples.is_empty(),
        format!("{checked} automata checked, counterexamples {counterexamples:?}"),
    );

    r.check(
        "8 TC implies synchronizing",
        not_sync.is_empty(),
        format!("{tc_count} TC automata, exceptions {not_sync:?}"),
    );

    let config = BenchConfig::default();
    let report = bench::run(&config).unwrap();
    let largest = report.largest().unwrap().total;
    let slope = report.slope.unwrap_or(f64::INFINITY);
    r.check(
        "9 decision scaling",
        slope <= 3.5 && largest < Duration::from_secs(10),
        format!(
            "sizes {:?}, totals ms {:?}, slope {slope:.3}",
            config.sizes,
            report
                .rows
                .iter()
                .map(|row| (row.total.as_secs_f64() * 1e3 * 1000.0).round() / 1000.0)
                .collect::<Vec<_>>()
        ),
    );
    let mixed = bench::run(&BenchConfig {
        family: BenchFamily::Mixed,
        ..BenchConfig::default()
    })
    .unwrap();
    r.note(format!(
        "permutation-rich grid: totals ms {:?}, slope {:.3}",
        mixed
            .rows
            .iter()
            .map(|row| (row.total.as_secs_f64() * 1e3 * 1000.0).round() / 1000.0)
            .collect::<Vec<_>>(),
        mixed.slope.unwrap_or(f64::NAN)
    ));

    let counts: Vec<(usize, usize, u128)> = (0..=8)
        .map(|n| (n, all_partitions(n).count(), bell_number(n)))
        .collect();
    r.check(
        "10 partition enumeration matches Bell numbers",
        counts.iter().all(|&(_, c, b)| c as u128 == b) && bell_number(3) == 5,
        format!("{:?}", counts.iter().map(|c| c.1).collect::<Vec<_>>()),
    );

    if r.failures == 0 {
        println!("all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{} criteria failed", r.failures);
        ExitCode::FAILURE
    }
}
