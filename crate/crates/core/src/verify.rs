//! Counting and the exhaustive verification suites.
//!
//! Every suite splits its domain into shards, one per shape, and checks each
//! shard on its own. Shard reports merge in any grouping; [`Report::finalize`]
//! then settles the outcome.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use crate::domino::{
    enumerate_domino, enumerate_tilings, is_domino_fixed, is_valid_tiling, tiling_of_fixed,
    two_tableau_of_tiling, DominoWeight,
};
use crate::operators::{bk_skew, evacuation, p_operator};
use crate::partition::{contains, is_horizontal_strip, partitions_in_box, Partition, SkewShape};
use crate::space::{Op, TableauSpace};
use crate::sym_action::{domino_weight_action_check, s_action};
use crate::tableau::{enumerate_tableaux, enumerate_tableaux_weight, Tableau, Weight};
use crate::word::{Generator, Word, WordError};

use Generator::{PartialEvacuation, Sigma, Switch, Tau, T};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    UnknownSuite(String),
    Word(WordError),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::UnknownSuite(s) => write!(f, "unknown suite '{s}'"),
            VerifyError::Word(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for VerifyError {}

impl From<WordError> for VerifyError {
    fn from(e: WordError) -> Self {
        VerifyError::Word(e)
    }
}

/// The domain of a suite: shapes in a `rows × cols` box with entries at most
/// `n`, optionally capped in size or narrowed to one shape and weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub rows: usize,
    pub cols: usize,
    pub n: usize,
    pub max_size: Option<usize>,
    pub shape: Option<Partition>,
    pub weight: Option<Vec<usize>>,
}

impl Bounds {
    pub fn boxed(n: usize, rows: usize, cols: usize) -> Self {
        Bounds {
            rows,
            cols,
            n,
            max_size: None,
            shape: None,
            weight: None,
        }
    }

    pub fn single(shape: &Partition, n: usize) -> Self {
        Bounds {
            rows: shape.num_rows(),
            cols: shape.row_len(1),
            n,
            max_size: None,
            shape: Some(shape.clone()),
            weight: None,
        }
    }

    pub fn with_max_size(mut self, size: usize) -> Self {
        self.max_size = Some(size);
        self
    }
}

/// A failing instance, or the instance found by an existence search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub relation: String,
    pub lhs_word: Option<Word>,
    pub rhs_word: Option<Word>,
    pub tableau: Option<Tableau>,
    pub lhs: Option<Tableau>,
    pub rhs: Option<Tableau>,
    pub detail: Option<String>,
}

impl Witness {
    pub fn note(relation: impl Into<String>, detail: impl Into<String>) -> Self {
        Witness {
            relation: relation.into(),
            lhs_word: None,
            rhs_word: None,
            tableau: None,
            lhs: None,
            rhs: None,
            detail: Some(detail.into()),
        }
    }

    pub fn at(relation: impl Into<String>, t: &Tableau) -> Self {
        Witness {
            tableau: Some(t.clone()),
            detail: None,
            ..Witness::note(relation, "")
        }
    }

    /// The canonical order used to pick one witness among many: least
    /// tableau first, then by relation.
    fn precedes(&self, other: &Witness) -> bool {
        let a = (
            self.tableau.is_none(),
            &self.tableau,
            &self.relation,
            &self.detail,
        );
        let b = (
            other.tableau.is_none(),
            &other.tableau,
            &other.relation,
            &other.detail,
        );
        a < b
    }
}

fn grid_text(t: &Tableau) -> String {
    let rows: Vec<String> = t
        .to_grid()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|e| e.to_string()).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.relation)?;
        if let Some(t) = &self.tableau {
            write!(f, " at {} (n={})", grid_text(t), t.n())?;
        }
        if let (Some(l), Some(r)) = (&self.lhs, &self.rhs) {
            write!(f, ": lhs {} rhs {}", grid_text(l), grid_text(r))?;
        }
        if let Some(d) = &self.detail {
            if !d.is_empty() {
                write!(f, ": {d}")?;
            }
        }
        Ok(())
    }
}

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Verified,
    Counterexample(Witness),
    /// An existence search came back empty.
    NotFound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expect {
    /// The suite fails with [`Outcome::NotFound`] unless a witness turns up.
    Exists,
    /// Reported only.
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Search {
    pub expect: Expect,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub domain: Bounds,
    pub checked: u64,
    pub outcome: Outcome,
    pub searches: BTreeMap<String, Search>,
    pub notes: Vec<String>,
    pub elapsed: Option<Duration>,
}

impl Report {
    pub fn new(suite: impl Into<String>, domain: Bounds) -> Self {
        Report {
            suite: suite.into(),
            domain,
            checked: 0,
            outcome: Outcome::Verified,
            searches: BTreeMap::new(),
            notes: Vec::new(),
            elapsed: None,
        }
    }

    pub fn is_verified(&self) -> bool {
        self.outcome == Outcome::Verified
    }

    pub fn counterexample(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Counterexample(w) => Some(w),
            _ => None,
        }
    }

    /// Records a failure, keeping the least witness.
    pub fn fail(&mut self, w: Witness) {
        match &self.outcome {
            Outcome::Counterexample(old) if !w.precedes(old) => {}
            _ => self.outcome = Outcome::Counterexample(w),
        }
    }

    /// Registers an existence search, and its witness when one is given.
    pub fn search(&mut self, key: impl Into<String>, expect: Expect, w: Option<Witness>) {
        let entry = self.searches.entry(key.into()).or_insert(Search {
            expect,
            witness: None,
        });
        if let Some(w) = w {
            match &entry.witness {
                Some(old) if !w.precedes(old) => {}
                _ => entry.witness = Some(w),
            }
        }
    }

    pub fn merge(mut self, other: Report) -> Report {
        self.checked += other.checked;
        if let Outcome::Counterexample(w) = other.outcome {
            self.fail(w);
        }
        for (k, s) in other.searches {
            self.search(k, s.expect, s.witness);
        }
        self.notes.extend(other.notes);
        self.elapsed = match (self.elapsed, other.elapsed) {
            (Some(a), Some(b)) => Some(a + b),
            (a, b) => a.or(b),
        };
        self
    }

    pub fn finalize(mut self) -> Report {
        self.notes.sort();
        self.notes.dedup();
        if self.outcome == Outcome::Verified
            && self
                .searches
                .values()
                .any(|s| s.expect == Expect::Exists && s.witness.is_none())
        {
            self.outcome = Outcome::NotFound;
        }
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = &self.domain;
        write!(f, "{}: n={} box={}x{}", self.suite, d.n, d.rows, d.cols)?;
        if let Some(m) = d.max_size {
            write!(f, " size<={m}")?;
        }
        if let Some(s) = &d.shape {
            write!(f, " shape={s}")?;
        }
        if let Some(w) = &d.weight {
            write!(f, " weight={}", Weight(w.clone()))?;
        }
        write!(f, "\nchecked: {}", self.checked)?;
        match &self.outcome {
            Outcome::Verified => f.write_str("\noutcome: verified")?,
            Outcome::NotFound => f.write_str("\noutcome: not found")?,
            Outcome::Counterexample(w) => write!(f, "\noutcome: counterexample\nwitness: {w}")?,
        }
        for (k, s) in &self.searches {
            match &s.witness {
                Some(w) => write!(f, "\nsearch {k}: {w}")?,
                None => write!(f, "\nsearch {k}: none")?,
            }
        }
        for n in &self.notes {
            write!(f, "\nnote: {n}")?;
        }
        if let Some(e) = self.elapsed {
            write!(f, "\nelapsed: {:.3}s", e.as_secs_f64())?;
        }
        Ok(())
    }
}

/// `K_{λ,β}`.
pub fn kostka(shape: &Partition, weight: &Weight) -> u64 {
    enumerate_tableaux_weight(shape, weight).count() as u64
}

/// `K^{(2)}_{λ,β′}`.
pub fn kostka2(shape: &Partition, weight: &DominoWeight, n: usize) -> u64 {
    enumerate_domino(shape, weight, n).count() as u64
}

/// `|Tab_λ^S(β)|`, counted among all of `Tab_λ(β)`.
pub fn count_self_evacuating(shape: &Partition, weight: &Weight) -> u64 {
    enumerate_tableaux_weight(shape, weight)
        .filter(|t| &evacuation(t) == t)
        .count() as u64
}

/// Every weight of length `len` with the given total.
pub fn compositions(total: usize, len: usize) -> Vec<Weight> {
    fn go(total: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Weight>) {
        if len == 0 {
            if total == 0 {
                out.push(Weight(cur.clone()));
            }
            return;
        }
        let lo = if len == 1 { total } else { 0 };
        for x in lo..=total {
            cur.push(x);
            go(total - x, len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, len, &mut Vec::new(), &mut out);
    out
}

/// Every domino weight for entry bound `n` covering `size` cells.
pub fn domino_weights(size: usize, n: usize) -> Vec<DominoWeight> {
    let len = n.div_ceil(2);
    let mut out = Vec::new();
    if n.is_multiple_of(2) {
        if size.is_multiple_of(2) {
            out.extend(
                compositions(size / 2, len)
                    .into_iter()
                    .map(|w| DominoWeight(w.0)),
            );
        }
    } else {
        for single in 0..=size {
            if (size - single).is_multiple_of(2) {
                for w in compositions((size - single) / 2, len - 1) {
                    let mut v = w.0;
                    v.push(single);
                    out.push(DominoWeight(v));
                }
            }
        }
        out.sort();
    }
    out
}

/// Polynomial in the variables `y_n, y_{n-2}, …` as exponent vectors with
/// nonzero integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SignedMonomialTable {
    terms: BTreeMap<Vec<usize>, i64>,
}

impl SignedMonomialTable {
    pub fn add(&mut self, exponents: Vec<usize>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(exponents.clone()).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exponents);
        }
    }

    pub fn negated(&self) -> Self {
        SignedMonomialTable {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[usize]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &i64)> {
        self.terms.iter()
    }
}

/// `x^β` after `x_{n-1} = -y_n, x_n = y_n, x_{n-3} = -y_{n-2}, …`; for odd
/// `n` the variable `x_1` stays as `y_1`.
pub fn specialize(weight: &Weight) -> (Vec<usize>, i64) {
    let b = weight.as_slice();
    let n = b.len();
    let mut exps = Vec::with_capacity(n.div_ceil(2));
    let mut sign = 1i64;
    for k in 1..=n / 2 {
        let (lo, hi) = (b[n - 2 * k], b[n - 2 * k + 1]);
        exps.push(lo + hi);
        if lo % 2 == 1 {
            sign = -sign;
        }
    }
    if n % 2 == 1 {
        exps.push(b[0]);
    }
    (exps, sign)
}

/// `s_λ(x_1, …, x_n)` under [`specialize`].
pub fn specialized_schur(shape: &Partition, n: usize) -> SignedMonomialTable {
    let mut table = SignedMonomialTable::default();
    for t in enumerate_tableaux(shape, n) {
        let (e, s) = specialize(&t.weight());
        table.add(e, s);
    }
    table
}

/// `Σ_{β′} K^{(2)}_{λ,β′} y_n^{2β′_1} y_{n-2}^{2β′_2} ⋯`, with `y_1^{β′_{(n+1)/2}}`
/// for odd `n`.
pub fn domino_count_table(shape: &Partition, n: usize) -> SignedMonomialTable {
    let mut table = SignedMonomialTable::default();
    for b in domino_weights(shape.size(), n) {
        let k = kostka2(shape, &b, n) as i64;
        let mut e: Vec<usize> = b.0[..n / 2].iter().map(|x| 2 * x).collect();
        if n % 2 == 1 {
            e.push(b.0[n / 2]);
        }
        table.add(e, k);
    }
    table
}

pub fn check_schur_specialization(shape: &Partition, n: usize) -> Report {
    let mut rep = Report::new("eq01", Bounds::single(shape, n));
    let lhs = specialized_schur(shape, n);
    let rhs = domino_count_table(shape, n);
    rep.checked = (lhs.len() + rhs.len()) as u64;
    if lhs.is_empty() && rhs.is_empty() {
        rep.notes.push(format!("{shape}: both sides vanish"));
    } else if lhs == rhs {
        rep.notes.push(format!("{shape}: sign +1"));
    } else if lhs == rhs.negated() {
        rep.notes.push(format!("{shape}: sign -1"));
    } else {
        let mut keys: BTreeSet<&Vec<usize>> = lhs.terms.keys().collect();
        keys.extend(rhs.terms.keys());
        let sign = lhs
            .iter()
            .next()
            .map_or(1, |(k, &v)| v.signum() * rhs.coefficient(k).signum());
        let bad = keys
            .into_iter()
            .find(|k| lhs.coefficient(k) != sign * rhs.coefficient(k))
            .expect("tables differ");
        rep.fail(Witness::note(
            format!("specialization of s{shape}"),
            format!(
                "monomial {:?}: schur {} vs domino {}",
                bad,
                lhs.coefficient(bad),
                rhs.coefficient(bad)
            ),
        ));
    }
    rep
}

/// `P` restricted to `Tab_λ^D(β′)` against `Tab_λ^S(β)`.
pub fn check_bijection_thm12(shape: &Partition, weight: &DominoWeight, n: usize) -> Report {
    let mut bounds = Bounds::single(shape, n);
    bounds.weight = Some(weight.0.clone());
    let mut rep = Report::new("thm12", bounds);
    if weight.len() != n.div_ceil(2) || weight.cells(n) != shape.size() {
        return rep;
    }
    let target = weight.self_evacuating_weight(n);
    let mut image = BTreeSet::new();
    let mut domain = 0u64;
    for t in
        enumerate_tableaux_weight(shape, &weight.fixed_tableau_weight(n)).filter(is_domino_fixed)
    {
        domain += 1;
        let u = p_operator(&t);
        let ok = evacuation(&u) == u && u.shape() == *shape && u.weight() == target;
        if !ok {
            rep.fail(Witness {
                lhs: Some(u.clone()),
                ..Witness::at("P(T) is self-evacuating of weight β", &t)
            });
        }
        if !image.insert(u) {
            rep.fail(Witness::at("P is injective", &t));
        }
    }
    rep.checked = domain;
    let k2 = kostka2(shape, weight, n);
    let selfevac = count_self_evacuating(shape, &target);
    if k2 != domain || selfevac != image.len() as u64 {
        rep.fail(Witness::note(
            format!("counts for {shape}, β′={weight}"),
            format!(
                "domino {k2}, D-fixed {domain}, image {}, self-evacuating {selfevac}",
                image.len()
            ),
        ));
    }
    rep
}

/// Every relation suite, by command-line name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Eq15,
    Thm15,
    Eq21To25,
    Lemma13,
    Thm16a,
    Thm16b,
    Prop17,
    Thm18,
    Eq111,
    Eq110,
    Thm12,
    Eq01,
    LemmaA1,
    Eq17,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Eq15,
        Suite::Thm15,
        Suite::Eq21To25,
        Suite::Lemma13,
        Suite::Thm16a,
        Suite::Thm16b,
        Suite::Prop17,
        Suite::Thm18,
        Suite::Eq111,
        Suite::Eq110,
        Suite::Thm12,
        Suite::Eq01,
        Suite::LemmaA1,
        Suite::Eq17,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Eq15 => "eq15",
            Suite::Thm15 => "thm15",
            Suite::Eq21To25 => "eq21-25",
            Suite::Lemma13 => "lemma13",
            Suite::Thm16a => "thm16a",
            Suite::Thm16b => "thm16b",
            Suite::Prop17 => "prop17",
            Suite::Thm18 => "thm18",
            Suite::Eq111 => "eq111",
            Suite::Eq110 => "eq110",
            Suite::Thm12 => "thm12",
            Suite::Eq01 => "eq01",
            Suite::LemmaA1 => "lemma-a1",
            Suite::Eq17 => "eq17",
        }
    }

    pub fn from_name(name: &str) -> Result<Suite, VerifyError> {
        Suite::ALL
            .iter()
            .copied()
            .find(|s| s.name() == name)
            .ok_or_else(|| VerifyError::UnknownSuite(name.to_string()))
    }

    /// The shapes this suite checks one at a time.
    pub fn shards(self, bounds: &Bounds) -> Vec<Partition> {
        if let Some(s) = &bounds.shape {
            return vec![s.clone()];
        }
        partitions_in_box(bounds.rows, bounds.cols)
            .filter(|p| bounds.max_size.is_none_or(|m| p.size() <= m))
            .filter(|p| self == Suite::LemmaA1 || p.num_rows() <= bounds.n)
            .collect()
    }

    pub fn run_shard(self, bounds: &Bounds, shape: &Partition) -> Result<Report, VerifyError> {
        let mut rep = Report::new(self.name(), bounds.clone());
        match self {
            Suite::Eq01 => {
                return Ok(Report {
                    suite: rep.suite,
                    domain: rep.domain,
                    ..check_schur_specialization(shape, bounds.n)
                })
            }
            Suite::Thm12 => {
                for b in weights_for(bounds, shape) {
                    rep = rep.merge(check_bijection_thm12(shape, &b, bounds.n));
                }
                rep.domain = bounds.clone();
                return Ok(rep);
            }
            Suite::Eq110 => {
                eq110(&mut rep, bounds, shape);
                return Ok(rep);
            }
            Suite::LemmaA1 => {
                lemma_a1(&mut rep, shape);
                return Ok(rep);
            }
            _ => {}
        }
        let mut c = Checker {
            space: TableauSpace::new(shape, bounds.n),
            rep,
        };
        if c.space.is_empty() {
            return Ok(c.rep);
        }
        let n = bounds.n;
        match self {
            Suite::Eq15 => {
                for i in 1..n {
                    c.power(&format!("t{i}^2 = id"), &[T(i)], 2)?;
                    for j in i + 2..n {
                        c.commute(T(i), T(j))?;
                    }
                }
            }
            Suite::Thm15 => {
                for i in 1..n {
                    c.power(&format!("s{i}^2 = id"), &[Switch(i)], 2)?;
                    if i + 1 < n {
                        c.power(
                            &format!("(s{i} s{})^3 = id", i + 1),
                            &[Switch(i), Switch(i + 1)],
                            3,
                        )?;
                    }
                    for j in i + 2..n {
                        c.commute(Switch(i), Switch(j))?;
                    }
                    c.direct_s(i)?;
                }
            }
            Suite::Eq21To25 => {
                for i in 1..n {
                    for j in 1..n {
                        if i.abs_diff(j) > 1 {
                            c.commute(Switch(i), T(j))?;
                        }
                    }
                }
                for i in 2..n.saturating_sub(1) {
                    for j in 1..n {
                        if i.abs_diff(j) > 2 {
                            c.commute(Sigma(i), T(j))?;
                        }
                    }
                }
                for j in 2..n {
                    for i in 2..=j {
                        c.equal(
                            &format!("s{i} = p{j} s{} p{j}'", i - 1),
                            &[Switch(i)],
                            &[
                                Generator::Promotion(j),
                                Switch(i - 1),
                                Generator::PromotionInv(j),
                            ],
                        )?;
                    }
                    c.equal(
                        &format!("t{} s{j} t{} = t{j} s{} t{j}", j - 1, j - 1, j - 1),
                        &[T(j - 1), Switch(j), T(j - 1)],
                        &[T(j), Switch(j - 1), T(j)],
                    )?;
                }
            }
            Suite::Lemma13 => {
                use Generator::{Evacuation, PInv, D, P};
                c.equal("P D P' = S", &[P, D, PInv], &[Evacuation])?;
                c.power("D^2 = id", &[D], 2)?;
                c.power("S^2 = id", &[Evacuation], 2)?;
                c.equal("P' P = id", &[PInv, P], &[])?;
                let s = c.space.generator(Evacuation)?;
                let w0: Vec<usize> = (1..=n).rev().collect();
                if s.rho != crate::Permutation::from_images(&w0).expect("reversal") {
                    c.rep.fail(Witness::note(
                        "rho(S) is the reversal",
                        format!("rho(S) = {}", s.rho),
                    ));
                }
            }
            Suite::Thm16a => {
                for i in 2..n.saturating_sub(1) {
                    let (lhs, rhs) = ([Generator::D, Sigma(i)], [Sigma(i), Generator::D]);
                    if i % 2 == n % 2 {
                        c.equal(&format!("D sigma{i} = sigma{i} D"), &lhs, &rhs)?;
                    } else {
                        let key = format!("D sigma{i} != sigma{i} D");
                        let w = c.mismatch(&key, &lhs, &rhs)?;
                        c.rep.search(key, Expect::Exists, w);
                    }
                }
            }
            Suite::Thm16b => {
                for i in 2..n.saturating_sub(1) {
                    c.power(&format!("sigma{i}^2 = id"), &[Sigma(i)], 2)?;
                    for j in i + 1..n - 1 {
                        let m = coxeter_order(i, j);
                        c.power(
                            &format!("(sigma{i} sigma{j})^{m} = id"),
                            &[Sigma(i), Sigma(j)],
                            m,
                        )?;
                    }
                }
            }
            Suite::Prop17 => {
                for k in 1..n / 2 {
                    c.power(&format!("tau{k}^2 = id"), &[Tau(k)], 2)?;
                    c.commute(Generator::Evacuation, Tau(k))?;
                    if k + 1 < n / 2 {
                        c.power(
                            &format!("(tau{k} tau{})^3 = id", k + 1),
                            &[Tau(k), Tau(k + 1)],
                            3,
                        )?;
                    }
                    for l in k + 2..n / 2 {
                        c.commute(Tau(k), Tau(l))?;
                    }
                }
            }
            Suite::Thm18 => {
                for k in 1..n / 2 {
                    c.equal(
                        &format!("P' tau{k} P = sigma{}", n - 2 * k),
                        &[Generator::PInv, Tau(k), Generator::P],
                        &[Sigma(n - 2 * k)],
                    )?;
                }
            }
            Suite::Eq111 => {
                for i in 1..n {
                    c.equal(
                        &format!("S s{i} S = s{}", n - i),
                        &[Generator::Evacuation, Switch(i), Generator::Evacuation],
                        &[Switch(n - i)],
                    )?;
                }
            }
            Suite::Eq17 => {
                for i in 1..n {
                    for m in [i, i + 1] {
                        let key = format!("s{i} = S{m} t1 S{m}");
                        let lhs = [PartialEvacuation(m), T(1), PartialEvacuation(m)];
                        let w = c.mismatch(&key, &lhs, &[Switch(i)])?;
                        c.rep.search(format!("{key} fails"), Expect::Info, w);
                    }
                }
            }
            Suite::Eq01 | Suite::Thm12 | Suite::Eq110 | Suite::LemmaA1 => unreachable!(),
        }
        Ok(c.rep)
    }

    /// Runs every shard in order, then finalizes.
    pub fn run(self, bounds: &Bounds) -> Result<Report, VerifyError> {
        let mut rep = Report::new(self.name(), bounds.clone());
        for shape in self.shards(bounds) {
            rep = rep.merge(self.run_shard(bounds, &shape)?);
        }
        Ok(rep.finalize())
    }
}

pub fn check_relation_suite(name: &str, bounds: &Bounds) -> Result<Report, VerifyError> {
    Suite::from_name(name)?.run(bounds)
}

/// `lhs = rhs` on every tableau of every shape in the bounds.
pub fn check_identity(lhs: &Word, rhs: &Word, bounds: &Bounds) -> Result<Report, VerifyError> {
    lhs.validate(bounds.n)?;
    rhs.validate(bounds.n)?;
    let mut rep = Report::new("identity", bounds.clone());
    for shape in Suite::Eq15.shards(bounds) {
        let mut c = Checker {
            space: TableauSpace::new(&shape, bounds.n),
            rep: Report::new("identity", bounds.clone()),
        };
        if !c.space.is_empty() {
            c.equal(&format!("{lhs} = {rhs}"), &lhs.0, &rhs.0)?;
        }
        rep = rep.merge(c.rep);
    }
    Ok(rep.finalize())
}

/// The order table of the `σ_i`.
pub fn coxeter_order(i: usize, j: usize) -> usize {
    match i.abs_diff(j) {
        0 => 1,
        1 | 2 => 3,
        3 => 6,
        _ => 2,
    }
}

fn weights_for(bounds: &Bounds, shape: &Partition) -> Vec<DominoWeight> {
    match &bounds.weight {
        Some(w) => vec![DominoWeight(w.clone())],
        None => domino_weights(shape.size(), bounds.n),
    }
}

fn eq110(rep: &mut Report, bounds: &Bounds, shape: &Partition) {
    let n = bounds.n;
    for b in weights_for(bounds, shape) {
        for i in 1..n / 2 {
            let swapped = b.swapped(i);
            let (k, k_swapped) = (kostka2(shape, &b, n), kostka2(shape, &swapped, n));
            if k != k_swapped {
                rep.fail(Witness::note(
                    format!("K2 {shape} invariant under (β′ {i} {})", i + 1),
                    format!("{b}: {k}, {swapped}: {k_swapped}"),
                ));
            }
            let r = domino_weight_action_check(shape, &b, i, n);
            rep.checked += r.checked;
            if let Outcome::Counterexample(w) = r.outcome {
                rep.fail(w);
            }
        }
    }
}

fn lemma_a1(rep: &mut Report, outer: &Partition) {
    let rows = outer.num_rows();
    let cols = outer.row_len(1);
    let inside: Vec<Partition> = partitions_in_box(rows, cols)
        .filter(|p| contains(p, outer))
        .collect();
    for inner in &inside {
        if !contains(inner, outer) {
            continue;
        }
        let shape = SkewShape::new(outer.clone(), inner.clone()).expect("nested");
        let middles: Vec<&Partition> = inside
            .iter()
            .filter(|m| is_horizontal_strip(m, inner) && is_horizontal_strip(outer, m))
            .filter(|m| bk_skew(inner, m, outer).ok().as_ref() == Some(*m))
            .collect();
        let coverings: Vec<_> = enumerate_tilings(&shape)
            .into_iter()
            .filter(|t| is_valid_tiling(&shape, t))
            .collect();
        rep.checked += 1;
        let label = format!("middles vs coverings on {outer}/{inner}");
        if middles.len() != coverings.len() || middles.len() > 1 {
            rep.fail(Witness::note(
                label,
                format!(
                    "{} fixed middles, {} coverings",
                    middles.len(),
                    coverings.len()
                ),
            ));
            continue;
        }
        if let (Some(m), Some(cov)) = (middles.first(), coverings.first()) {
            let forward = tiling_of_fixed(inner, m, outer, 1).ok();
            let back = two_tableau_of_tiling(&shape, cov).ok();
            if forward.as_ref() != Some(cov) || back.as_ref() != Some(*m) {
                rep.fail(Witness::note(
                    label,
                    format!("round trip fails for middle {m}"),
                ));
            }
        }
    }
}

struct Checker {
    space: TableauSpace,
    rep: Report,
}

impl Checker {
    fn op(&mut self, gens: &[Generator]) -> Result<Op, VerifyError> {
        Ok(self.space.word(&Word::new(gens.to_vec()))?)
    }

    fn weight_check(&mut self, relation: &str, word: &[Generator], op: &Op) {
        if let Some(x) = self.space.rho_violation(op) {
            let t = self.space.get(x);
            self.rep.fail(Witness {
                lhs_word: Some(Word::new(word.to_vec())),
                lhs: Some(self.space.get(op.map[x] as usize).clone()),
                detail: Some(format!("weight does not move by {}", op.rho)),
                ..Witness::at(format!("weight of {relation}"), t)
            });
        }
    }

    /// First tableau where the two words differ, as a witness.
    fn mismatch(
        &mut self,
        relation: &str,
        lhs: &[Generator],
        rhs: &[Generator],
    ) -> Result<Option<Witness>, VerifyError> {
        let a = self.op(lhs)?;
        let b = self.op(rhs)?;
        self.rep.checked += self.space.len() as u64;
        self.weight_check(relation, lhs, &a);
        self.weight_check(relation, rhs, &b);
        let x = a.map.iter().zip(&b.map).position(|(u, v)| u != v);
        Ok(x.map(|x| Witness {
            lhs_word: Some(Word::new(lhs.to_vec())),
            rhs_word: Some(Word::new(rhs.to_vec())),
            lhs: Some(self.space.get(a.map[x] as usize).clone()),
            rhs: Some(self.space.get(b.map[x] as usize).clone()),
            ..Witness::at(relation, self.space.get(x))
        }))
    }

    fn equal(
        &mut self,
        relation: &str,
        lhs: &[Generator],
        rhs: &[Generator],
    ) -> Result<(), VerifyError> {
        if let Some(w) = self.mismatch(relation, lhs, rhs)? {
            self.rep.fail(w);
        }
        Ok(())
    }

    fn power(&mut self, relation: &str, word: &[Generator], k: usize) -> Result<(), VerifyError> {
        let w = Word::new(word.to_vec()).pow(k);
        self.equal(relation, &w.0, &[])
    }

    fn commute(&mut self, a: Generator, b: Generator) -> Result<(), VerifyError> {
        self.equal(&format!("{a} {b} = {b} {a}"), &[a, b], &[b, a])
    }

    /// The map of `s_i` against the recursion evaluated tableau by tableau.
    fn direct_s(&mut self, i: usize) -> Result<(), VerifyError> {
        let op = self.space.generator(Switch(i))?;
        self.rep.checked += self.space.len() as u64;
        for (x, t) in self.space.items().iter().enumerate() {
            let direct = s_action(t, i).expect("index checked");
            let mapped = self.space.get(op.map[x] as usize);
            if &direct != mapped {
                let w = Witness {
                    lhs: Some(direct),
                    rhs: Some(mapped.clone()),
                    ..Witness::at(format!("s{i} recursion = s{i} word"), t)
                };
                self.rep.fail(w);
                break;
            }
        }
        Ok(())
    }
}
