//! Operator words and their expansion into Bender-Knuth words.
//!
//! A written product `X Y` applies `Y` first. Text tokens:
//! `t3`, `p2`, `p2'`, `s1`, `sigma4`, `tau2`, `S`, `S3`, `D`, `P`, `P'`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::permutation::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// Bender-Knuth involution `t_i`.
    T(usize),
    /// `p_i = t_1 t_2 ⋯ t_i`, the inverse of the i-th promotion.
    Promotion(usize),
    /// `p_i^{-1} = t_i ⋯ t_1`.
    PromotionInv(usize),
    /// `s_i`, the simple transposition of the symmetric-group action.
    Switch(usize),
    /// `σ_i = t_i s_{i-1} s_{i+1} t_i`.
    Sigma(usize),
    /// `τ_k = s_k s_{n-k}`.
    Tau(usize),
    /// Evacuation `S = S_n`.
    Evacuation,
    /// `S_m = p_{m-1} ⋯ p_1`.
    PartialEvacuation(usize),
    /// `D = t_{n-1} t_{n-3} ⋯`.
    D,
    /// `P = p_{n-1} p_{n-3} ⋯`.
    P,
    PInv,
}

impl Generator {
    /// Whether the generator's index is defined for entry bound `n`.
    pub fn valid_for(&self, n: usize) -> bool {
        let top = n.saturating_sub(1);
        match *self {
            Generator::T(i)
            | Generator::Promotion(i)
            | Generator::PromotionInv(i)
            | Generator::Switch(i) => (1..=top).contains(&i),
            Generator::Sigma(i) => n >= 4 && (2..=n - 2).contains(&i),
            Generator::Tau(k) => k >= 1 && k < n / 2,
            Generator::PartialEvacuation(m) => (1..=n).contains(&m),
            Generator::Evacuation | Generator::D | Generator::P | Generator::PInv => true,
        }
    }

    pub fn inverse(&self) -> Generator {
        match *self {
            Generator::Promotion(i) => Generator::PromotionInv(i),
            Generator::PromotionInv(i) => Generator::Promotion(i),
            Generator::P => Generator::PInv,
            Generator::PInv => Generator::P,
            g => g,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::T(i) => write!(f, "t{i}"),
            Generator::Promotion(i) => write!(f, "p{i}"),
            Generator::PromotionInv(i) => write!(f, "p{i}'"),
            Generator::Switch(i) => write!(f, "s{i}"),
            Generator::Sigma(i) => write!(f, "sigma{i}"),
            Generator::Tau(k) => write!(f, "tau{k}"),
            Generator::Evacuation => f.write_str("S"),
            Generator::PartialEvacuation(m) => write!(f, "S{m}"),
            Generator::D => f.write_str("D"),
            Generator::P => f.write_str("P"),
            Generator::PInv => f.write_str("P'"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    /// Unrecognized token starting at byte `position`.
    Syntax { position: usize, token: String },
    /// Token whose index is outside the range allowed for `n`.
    IndexOutOfRange { token: String, n: usize },
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::Syntax { position, token } => {
                write!(
                    f,
                    "syntax error at position {position}: unrecognized token {token:?}"
                )
            }
            WordError::IndexOutOfRange { token, n } => {
                write!(f, "index of {token:?} is out of range for n = {n}")
            }
        }
    }
}

impl core::error::Error for WordError {}

/// A product of generators in written order: the last factor acts first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn new(factors: Vec<Generator>) -> Self {
        Word(factors)
    }

    pub fn single(g: Generator) -> Self {
        Word(alloc::vec![g])
    }

    pub fn factors(&self) -> &[Generator] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self · other` (other acts first).
    pub fn then_after(&self, other: &Word) -> Word {
        let mut f = self.0.clone();
        f.extend_from_slice(&other.0);
        Word(f)
    }

    pub fn pow(&self, k: usize) -> Word {
        let mut f = Vec::with_capacity(self.0.len() * k);
        for _ in 0..k {
            f.extend_from_slice(&self.0);
        }
        Word(f)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(Generator::inverse).collect())
    }

    pub fn validate(&self, n: usize) -> Result<(), WordError> {
        match self.0.iter().find(|g| !g.valid_for(n)) {
            Some(g) => Err(WordError::IndexOutOfRange {
                token: g.to_string(),
                n,
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Parses a whitespace separated word and checks every index against `n`.
pub fn parse_word(text: &str, n: usize) -> Result<Word, WordError> {
    let mut factors = Vec::new();
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        let token = &text[start..pos];
        let g = parse_token(token).ok_or_else(|| WordError::Syntax {
            position: start,
            token: token.to_string(),
        })?;
        if !g.valid_for(n) {
            return Err(WordError::IndexOutOfRange {
                token: token.to_string(),
                n,
            });
        }
        factors.push(g);
    }
    Ok(Word(factors))
}

fn parse_token(token: &str) -> Option<Generator> {
    let name_end = token
        .find(|c: char| !c.is_ascii_alphabetic())
        .unwrap_or(token.len());
    let (name, rest) = token.split_at(name_end);
    let (digits, primed) = match rest.strip_suffix('\'') {
        Some(d) => (d, true),
        None => (rest, false),
    };
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let index: Option<usize> = if digits.is_empty() {
        None
    } else {
        Some(digits.parse().ok()?)
    };
    let g = match (name, index, primed) {
        ("t", Some(i), false) => Generator::T(i),
        ("p", Some(i), false) => Generator::Promotion(i),
        ("p", Some(i), true) => Generator::PromotionInv(i),
        ("s", Some(i), false) => Generator::Switch(i),
        ("sigma", Some(i), false) => Generator::Sigma(i),
        ("tau", Some(k), false) => Generator::Tau(k),
        ("S", None, false) => Generator::Evacuation,
        ("S", Some(m), false) => Generator::PartialEvacuation(m),
        ("D", None, false) => Generator::D,
        ("P", None, false) => Generator::P,
        ("P", None, true) => Generator::PInv,
        _ => return None,
    };
    Some(g)
}

/// A word in the Bender-Knuth generators, in written order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TWord(pub Vec<usize>);

impl TWord {
    /// Indices in the order they act.
    pub fn application_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().rev().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Cancels adjacent equal letters (`t_i t_i = id`).
    pub fn reduced(mut self) -> TWord {
        let mut out: Vec<usize> = Vec::with_capacity(self.0.len());
        for i in self.0.drain(..) {
            if out.last() == Some(&i) {
                out.pop();
            } else {
                out.push(i);
            }
        }
        TWord(out)
    }

    /// `ρ(w)`: each `t_j` maps to the transposition `(j, j+1)`.
    pub fn weight_permutation(&self, n: usize) -> Permutation {
        let mut images: Vec<usize> = (0..n).collect();
        // images of the composite, built by post-composing in acting order
        for j in self.application_order() {
            for y in images.iter_mut() {
                if *y == j - 1 {
                    *y = j;
                } else if *y == j {
                    *y = j - 1;
                }
            }
        }
        Permutation::from_images(&images.iter().map(|y| y + 1).collect::<Vec<_>>())
            .expect("product of transpositions is a permutation")
    }
}

/// Expands generators into t-words for a fixed entry bound, keeping the
/// recursively built `s_i` words.
#[derive(Debug, Clone)]
pub struct Expander {
    n: usize,
    switches: Vec<Vec<usize>>,
}

impl Expander {
    pub fn new(n: usize) -> Self {
        let mut switches: Vec<Vec<usize>> = Vec::new();
        for i in 1..n {
            let w = if i == 1 {
                alloc::vec![1]
            } else {
                // s_i = p_i s_{i-1} p_i^{-1}
                let mut w: Vec<usize> = (1..=i).collect();
                w.extend_from_slice(&switches[i - 2]);
                w.extend((1..=i).rev());
                TWord(w).reduced().0
            };
            switches.push(w);
        }
        Expander { n, switches }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Appends the expansion of `g` in written order. `g` must be valid for `n`.
    fn push(&self, g: Generator, out: &mut Vec<usize>) {
        let n = self.n;
        match g {
            Generator::T(i) => out.push(i),
            Generator::Promotion(i) => out.extend(1..=i),
            Generator::PromotionInv(i) => out.extend((1..=i).rev()),
            Generator::Switch(i) => out.extend_from_slice(&self.switches[i - 1]),
            Generator::Sigma(i) => {
                out.push(i);
                out.extend_from_slice(&self.switches[i - 2]);
                out.extend_from_slice(&self.switches[i]);
                out.push(i);
            }
            Generator::Tau(k) => {
                out.extend_from_slice(&self.switches[k - 1]);
                out.extend_from_slice(&self.switches[n - k - 1]);
            }
            Generator::Evacuation => self.push(Generator::PartialEvacuation(n.max(1)), out),
            Generator::PartialEvacuation(m) => {
                for j in (1..m).rev() {
                    out.extend(1..=j);
                }
            }
            Generator::D => {
                let mut j = n.saturating_sub(1);
                while j >= 1 {
                    out.push(j);
                    j = j.saturating_sub(2);
                }
            }
            Generator::P => {
                let mut j = n.saturating_sub(1);
                while j >= 1 {
                    out.extend(1..=j);
                    j = j.saturating_sub(2);
                }
            }
            Generator::PInv => {
                let mut start = Vec::new();
                self.push(Generator::P, &mut start);
                out.extend(start.into_iter().rev());
            }
        }
    }

    pub fn expand_generator(&self, g: Generator) -> TWord {
        let mut out = Vec::new();
        self.push(g, &mut out);
        TWord(out).reduced()
    }

    pub fn expand(&self, word: &Word) -> Result<TWord, WordError> {
        word.validate(self.n)?;
        let mut out = Vec::new();
        for &g in word.factors() {
            self.push(g, &mut out);
        }
        Ok(TWord(out).reduced())
    }
}

/// `ρ(w)` for a word valid at entry bound `n`.
pub fn weight_permutation(word: &Word, n: usize) -> Result<Permutation, WordError> {
    Ok(Expander::new(n).expand(word)?.weight_permutation(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn tw(n: usize, text: &str) -> Vec<usize> {
        Expander::new(n)
            .expand(&parse_word(text, n).unwrap())
            .unwrap()
            .0
    }

    #[test]
    fn parse_examples() {
        let w = parse_word("t1 t2 t1", 3).unwrap();
        assert_eq!(w.factors().len(), 3);
        assert_eq!(tw(3, "t1 t2 t1"), tw(3, "S"));
        assert_eq!(tw(3, "p2'"), vec![2, 1]);
        assert_eq!(
            parse_word("t5", 3),
            Err(WordError::IndexOutOfRange {
                token: "t5".into(),
                n: 3
            })
        );
        assert_eq!(
            parse_word("t1 x2", 3),
            Err(WordError::Syntax {
                position: 3,
                token: "x2".into()
            })
        );
        assert!(parse_word("t", 3).is_err());
        assert!(parse_word("D2", 3).is_err());
        assert!(parse_word("t1'", 3).is_err());
        assert!(parse_word("", 3).unwrap().is_empty());
        assert_eq!(
            parse_word("  sigma2\ttau1  S3 P' p1 ", 5)
                .unwrap()
                .factors(),
            &[
                Generator::Sigma(2),
                Generator::Tau(1),
                Generator::PartialEvacuation(3),
                Generator::PInv,
                Generator::Promotion(1)
            ]
        );
    }

    #[test]
    fn index_ranges() {
        assert!(parse_word("sigma2", 3).is_err());
        assert!(parse_word("sigma2", 4).is_ok());
        assert!(parse_word("sigma3", 4).is_err());
        assert!(parse_word("tau1", 3).is_err());
        assert!(parse_word("tau1", 4).is_ok());
        assert!(parse_word("tau2", 5).is_err());
        assert!(parse_word("tau2", 6).is_ok());
        assert!(parse_word("S4", 4).is_ok());
        assert!(parse_word("S5", 4).is_err());
        assert!(parse_word("s0", 4).is_err());
    }

    #[test]
    fn display_round_trips() {
        let text = "t1 p2 p2' s3 sigma2 tau1 S S3 D P P'";
        let w = parse_word(text, 6).unwrap();
        assert_eq!(format!("{w}"), text);
        assert_eq!(parse_word(&format!("{w}"), 6).unwrap(), w);
    }

    #[test]
    fn named_expansions() {
        // small cases of D, P, S worked out by hand
        assert_eq!(tw(2, "S"), vec![1]);
        assert_eq!(tw(2, "D"), vec![1]);
        assert_eq!(tw(2, "P"), vec![1]);
        assert_eq!(tw(3, "S"), vec![1, 2, 1]);
        assert_eq!(tw(3, "D"), vec![2]);
        assert_eq!(tw(3, "P"), vec![1, 2]);
        assert_eq!(tw(4, "D"), vec![3, 1]);
        assert_eq!(tw(4, "P"), vec![1, 2, 3, 1]);
        assert_eq!(tw(5, "P"), vec![1, 2, 3, 4, 1, 2]);
        assert_eq!(tw(5, "P'"), vec![2, 1, 4, 3, 2, 1]);
        assert_eq!(tw(4, "S1"), Vec::<usize>::new());
        assert_eq!(tw(1, "S D P"), Vec::<usize>::new());
        assert_eq!(tw(3, "s2"), vec![1, 2, 1, 2, 1]);
        assert_eq!(tw(3, "s1"), vec![1]);
        assert_eq!(tw(3, "t1 t1 t2"), vec![2]);
    }

    #[test]
    fn rho_examples() {
        let rho =
            |text: &str, n: usize| weight_permutation(&parse_word(text, n).unwrap(), n).unwrap();
        assert_eq!(rho("t1", 3), Permutation::adjacent(3, 1));
        assert_eq!(format!("{}", rho("D", 6)), "(1,2)(3,4)(5,6)");
        assert_eq!(format!("{}", rho("D", 5)), "(2,3)(4,5)");
        for n in 4..8 {
            for i in 2..=n - 2 {
                let a = |j: usize| Permutation::adjacent(n, j);
                let expected = a(i).compose(&a(i - 1)).compose(&a(i + 1)).compose(&a(i));
                assert_eq!(rho(&format!("sigma{i}"), n), expected);
            }
            // evacuation reverses the weight
            let s = rho("S", n);
            assert!((1..=n).all(|x| s.image(x) == n + 1 - x));
        }
        assert!(rho("", 3).is_identity());
    }

    #[test]
    fn inverse_words() {
        let w = parse_word("p2 P t1 S3", 5).unwrap();
        assert_eq!(format!("{}", w.inverse()), "S3 t1 P' p2'");
        let e = Expander::new(5);
        let mut both = e.expand(&w).unwrap().0;
        both.extend(e.expand(&w.inverse()).unwrap().0);
        assert!(TWord(both).reduced().is_empty());
    }
}
