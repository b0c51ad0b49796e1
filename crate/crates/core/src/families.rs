//! Example automata and seeded random automata.
//!
//! Letter rows below are 0-based; the doc comments use 1-based state labels.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::rng::SplitMix64;
use crate::{Automaton, Error, Result};

/// Three states, letters `c` (the cycle 1→2→3→1) and `t` (1→1, 2→1, 3→3).
pub fn automaton_t() -> Automaton {
    Automaton::new(3, vec![("c", vec![1, 2, 0]), ("t", vec![0, 0, 2])]).unwrap()
}

fn cycle(n: usize) -> Vec<usize> {
    (0..n).map(|q| (q + 1) % n).collect()
}

/// Černý automaton on `n ≥ 2` states: `a` is the cycle 1→2→…→n→1 and `b`
/// sends 1 to 2, fixing everything else.
pub fn cerny(n: usize) -> Result<Automaton> {
    if n < 2 {
        return Err(Error::FamilyTooSmall {
            family: "cerny",
            min: 2,
            n,
        });
    }
    let mut b: Vec<usize> = (0..n).collect();
    b[0] = 1;
    Automaton::new(n, vec![("a", cycle(n)), ("b", b)])
}

/// One letter `t{p}_{q}` per pair `p < q` (1-based) sending `q` to `p` and
/// fixing everything else, so every 2-subset is the root of a letter.
pub fn pair_merge(n: usize) -> Result<Automaton> {
    if n < 2 {
        return Err(Error::FamilyTooSmall {
            family: "pair-merge",
            min: 2,
            n,
        });
    }
    let mut letters = Vec::with_capacity(n * (n - 1) / 2);
    for p in 0..n {
        for q in p + 1..n {
            let mut row: Vec<usize> = (0..n).collect();
            row[q] = p;
            letters.push((format!("t{}_{}", p + 1, q + 1), row));
        }
    }
    Automaton::new(n, letters)
}

/// The classical generators of the full transformation monoid: `c` the
/// cycle, `s` the transposition of states 1 and 2, `m` sending 1 to 2.
/// For `n = 1` all three are the identity.
pub fn full_monoid(n: usize) -> Result<Automaton> {
    if n == 0 {
        return Err(Error::NoStates);
    }
    let mut s: Vec<usize> = (0..n).collect();
    let mut m: Vec<usize> = (0..n).collect();
    if n >= 2 {
        s.swap(0, 1);
        m[0] = 1;
    }
    Automaton::new(n, vec![("c", cycle(n)), ("s", s), ("m", m)])
}

/// Letter names for generated automata: `a`..`z`, then `x26`, `x27`, …
pub fn letter_name(i: usize) -> String {
    if i < 26 {
        String::from(char::from(b'a' + i as u8))
    } else {
        format!("x{i}")
    }
}

/// `k` letters on `n` states with every row entry drawn uniformly from
/// [`SplitMix64`] seeded with `seed`: letter 0 row 0..n, then letter 1, …
pub fn random_automaton(n: usize, k: usize, seed: u64) -> Result<Automaton> {
    if n == 0 {
        return Err(Error::NoStates);
    }
    let mut rng = SplitMix64::new(seed);
    let letters = (0..k)
        .map(|i| {
            let row = (0..n).map(|_| rng.below(n as u64) as usize).collect();
            (letter_name(i), row)
        })
        .collect();
    Automaton::new(n, letters)
}

/// Uniform random permutation of `0..n` (Fisher–Yates from the top).
fn random_permutation(rng: &mut SplitMix64, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        p.swap(i, j);
    }
    p
}

/// `perms` random permutation letters followed by one random 1-defect letter
/// (a random permutation with one entry redirected onto another state's
/// image). Used to time the decision procedure on dense pair graphs.
pub fn random_mixed(n: usize, perms: usize, seed: u64) -> Result<Automaton> {
    if n < 2 {
        return Err(Error::FamilyTooSmall {
            family: "random-mixed",
            min: 2,
            n,
        });
    }
    let mut rng = SplitMix64::new(seed);
    let mut letters: Vec<(String, Vec<usize>)> = (0..perms)
        .map(|i| (letter_name(i), random_permutation(&mut rng, n)))
        .collect();
    let mut defect = random_permutation(&mut rng, n);
    let p = rng.below(n as u64) as usize;
    let q = (p + 1 + rng.below(n as u64 - 1) as usize) % n;
    defect[q] = defect[p];
    letters.push((letter_name(perms), defect));
    Automaton::new(n, letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letters::LetterClass;
    use crate::StatePair;

    #[test]
    fn t_rows() {
        let t = automaton_t();
        assert_eq!(t.letter(0).as_slice(), &[1, 2, 0]);
        assert_eq!(t.letter(1).as_slice(), &[0, 0, 2]);
    }

    #[test]
    fn cerny_four_rows() {
        let c = cerny(4).unwrap();
        assert_eq!(c.letter(0).as_slice(), &[1, 2, 3, 0]);
        assert_eq!(c.letter(1).as_slice(), &[1, 1, 2, 3]);
        assert!(cerny(1).is_err());
    }

    #[test]
    fn cerny_classification_is_uniform() {
        for n in 2..=64 {
            let c = cerny(n).unwrap();
            assert_eq!(c.permutation_letters(), [0]);
            let d = c.defect_letters();
            assert_eq!(d.len(), 1);
            assert_eq!(d[0].1.root, StatePair::new(0, 1).unwrap());
        }
    }

    #[test]
    fn pair_merge_shape() {
        let a = pair_merge(5).unwrap();
        assert_eq!(a.num_letters(), 10);
        assert_eq!(a.letter_name(0), "t1_2");
        assert!(pair_merge(1).is_err());
    }

    #[test]
    fn full_monoid_letters() {
        let f = full_monoid(3).unwrap();
        assert_eq!(*f.letter_class(0), LetterClass::Permutation);
        assert_eq!(*f.letter_class(1), LetterClass::Permutation);
        assert!(f.letter_class(2).defect().is_some());
        assert_eq!(full_monoid(1).unwrap().num_letters(), 3);
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_automaton(6, 3, 99).unwrap();
        let b = random_automaton(6, 3, 99).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_automaton(6, 3, 100).unwrap());
        let one = random_automaton(1, 1, 7).unwrap();
        assert_eq!(one.letter(0).as_slice(), &[0]);
    }

    #[test]
    fn random_mixed_letter_classes() {
        for seed in 0..20 {
            let a = random_mixed(9, 2, seed).unwrap();
            assert_eq!(a.permutation_letters(), [0, 1]);
            assert_eq!(a.defect_letters().len(), 1);
        }
    }

    #[test]
    fn letter_names() {
        assert_eq!(letter_name(0), "a");
        assert_eq!(letter_name(25), "z");
        assert_eq!(letter_name(26), "x26");
    }
}
