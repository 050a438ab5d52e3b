//! The skew 2-tableau involution and the tableau operators built from it.

use core::fmt;

use crate::partition::{free_bounds, is_horizontal_strip, Partition};
use crate::permutation::Permutation;
use crate::tableau::Tableau;
use crate::word::{Expander, Generator, TWord, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorError {
    /// The triple is not a skew 2-tableau.
    InvalidTwoTableau,
    Word(WordError),
}

impl fmt::Display for OperatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorError::InvalidTwoTableau => {
                write!(f, "partitions do not form a skew 2-tableau")
            }
            OperatorError::Word(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for OperatorError {}

impl From<WordError> for OperatorError {
    fn from(e: WordError) -> Self {
        OperatorError::Word(e)
    }
}

/// The involution `t` on skew 2-tableaux `lower ⊆ middle ⊆ upper`.
///
/// In each row the free sub-row of `upper / lower` holds `l` a-cells followed
/// by `r` b-cells; they are replaced by `r` a-cells followed by `l` b-cells.
/// Returns the new middle partition.
pub fn bk_skew(
    lower: &Partition,
    middle: &Partition,
    upper: &Partition,
) -> Result<Partition, OperatorError> {
    if !is_horizontal_strip(middle, lower) || !is_horizontal_strip(upper, middle) {
        return Err(OperatorError::InvalidTwoTableau);
    }
    let w = upper.num_rows();
    let lo = lower.padded(w);
    let hi = upper.padded(w);
    let mut mid = middle.padded(w);
    bk_rows(&lo, &mut mid, &hi);
    Ok(Partition::from_padded(&mid))
}

/// Row-wise reflection of `mid` inside each free interval. Every row is
/// independent because the free interval depends only on `lower` and `upper`.
#[inline]
pub(crate) fn bk_rows(lower: &[u32], mid: &mut [u32], upper: &[u32]) {
    let w = mid.len();
    for k in 0..w {
        let below = if k + 1 < w { upper[k + 1] } else { 0 };
        let above = if k == 0 { None } else { Some(lower[k - 1]) };
        let (lo, hi) = free_bounds(
            lower[k] as usize,
            upper[k] as usize,
            below as usize,
            above.map(|a| a as usize),
        );
        if lo < hi {
            // a-cells of the free interval are lo+1..=mid, b-cells mid+1..=hi
            mid[k] = (lo + hi) as u32 - mid[k];
        }
    }
}

#[inline]
pub(crate) fn apply_t_in_place(t: &mut Tableau, i: usize) {
    let (lower, mid, upper) = t.triple_mut(i);
    bk_rows(lower, mid, upper);
}

pub(crate) fn apply_tword_in_place(t: &mut Tableau, word: &TWord) {
    for i in word.application_order() {
        apply_t_in_place(t, i);
    }
}

fn run(t: &Tableau, g: Generator) -> Result<Tableau, OperatorError> {
    if !g.valid_for(t.n()) {
        return Err(WordError::IndexOutOfRange {
            token: alloc::string::ToString::to_string(&g),
            n: t.n(),
        }
        .into());
    }
    let word = Expander::new(t.n()).expand_generator(g);
    let mut out = t.clone();
    apply_tword_in_place(&mut out, &word);
    Ok(out)
}

/// `t_i`: replaces `Λ_i` by the middle of `t(Λ_{i-1}, Λ_i, Λ_{i+1})`.
pub fn bender_knuth(t: &Tableau, i: usize) -> Result<Tableau, OperatorError> {
    run(t, Generator::T(i))
}

/// `p_i = t_1 t_2 ⋯ t_i` (inverse promotion).
pub fn promotion_inv(t: &Tableau, i: usize) -> Result<Tableau, OperatorError> {
    run(t, Generator::Promotion(i))
}

/// `p_i^{-1} = t_i ⋯ t_1`.
pub fn promotion(t: &Tableau, i: usize) -> Result<Tableau, OperatorError> {
    run(t, Generator::PromotionInv(i))
}

/// Schützenberger evacuation `S = p_{n-1} ⋯ p_1`.
pub fn evacuation(t: &Tableau) -> Tableau {
    run(t, Generator::Evacuation).expect("evacuation is defined for every n")
}

/// `S_m = p_{m-1} ⋯ p_1` for `1 ≤ m ≤ n`; `S_1` is the identity.
pub fn partial_evacuation(t: &Tableau, m: usize) -> Result<Tableau, OperatorError> {
    run(t, Generator::PartialEvacuation(m))
}

/// `D = t_{n-1} t_{n-3} ⋯`.
pub fn d_operator(t: &Tableau) -> Tableau {
    run(t, Generator::D).expect("D is defined for every n")
}

/// `P = p_{n-1} p_{n-3} ⋯`.
pub fn p_operator(t: &Tableau) -> Tableau {
    run(t, Generator::P).expect("P is defined for every n")
}

pub fn p_operator_inv(t: &Tableau) -> Tableau {
    run(t, Generator::PInv).expect("P^{-1} is defined for every n")
}

/// Applies `word` right to left.
pub fn apply_word(word: &Word, t: &Tableau) -> Result<Tableau, OperatorError> {
    let tw = Expander::new(t.n()).expand(word)?;
    let mut out = t.clone();
    apply_tword_in_place(&mut out, &tw);
    Ok(out)
}

/// Same as [`apply_word`] with an expander reused across calls.
pub fn apply_word_with(
    expander: &Expander,
    word: &Word,
    t: &Tableau,
) -> Result<Tableau, OperatorError> {
    debug_assert_eq!(expander.n(), t.n());
    let tw = expander.expand(word)?;
    let mut out = t.clone();
    apply_tword_in_place(&mut out, &tw);
    Ok(out)
}

pub fn apply_tword(word: &TWord, t: &Tableau) -> Tableau {
    let mut out = t.clone();
    apply_tword_in_place(&mut out, word);
    out
}

/// `ρ(w)` as a permutation of weight coordinates.
pub fn weight_permutation(word: &Word, n: usize) -> Result<Permutation, WordError> {
    crate::word::weight_permutation(word, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{enumerate_tableaux, Weight};
    use crate::word::parse_word;
    use alloc::vec;
    use alloc::vec::Vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn tab(rows: &[&[usize]], n: usize) -> Tableau {
        let g: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
        Tableau::from_grid(&g, n).unwrap()
    }

    #[test]
    fn bk_skew_examples() {
        assert_eq!(bk_skew(&p(&[]), &p(&[3]), &p(&[3, 1])).unwrap(), p(&[1]));
        assert_eq!(bk_skew(&p(&[]), &p(&[2]), &p(&[3, 1])).unwrap(), p(&[2]));
        let l = p(&[3, 1]);
        assert_eq!(bk_skew(&l, &l, &l).unwrap(), l);
        assert_eq!(
            bk_skew(&p(&[]), &p(&[1, 1]), &p(&[2, 2])),
            Err(OperatorError::InvalidTwoTableau)
        );
    }

    #[test]
    fn bender_knuth_examples() {
        let t = tab(&[&[1, 1, 1], &[2]], 2);
        assert_eq!(bender_knuth(&t, 1).unwrap(), tab(&[&[1, 2, 2], &[2]], 2));
        let t = tab(&[&[1, 1], &[2]], 3);
        let u = bender_knuth(&t, 2).unwrap();
        assert_eq!(u, tab(&[&[1, 1], &[3]], 3));
        assert_eq!(u.weight(), Weight(vec![2, 0, 1]));
        let t = tab(&[&[1, 2]], 2);
        assert_eq!(bender_knuth(&t, 1).unwrap(), t);
        assert!(bender_knuth(&t, 2).is_err());
        assert!(bender_knuth(&t, 0).is_err());
    }

    #[test]
    fn promotion_examples() {
        let t = tab(&[&[1, 1], &[2]], 3);
        assert_eq!(promotion_inv(&t, 1).unwrap(), bender_knuth(&t, 1).unwrap());
        let step = bender_knuth(&t, 2).unwrap();
        assert_eq!(
            promotion_inv(&t, 2).unwrap(),
            bender_knuth(&step, 1).unwrap()
        );
        // t_1 on [[1,1],[3]]: free row-1 interval holds a,a with no b
        assert_eq!(promotion_inv(&t, 2).unwrap(), tab(&[&[2, 2], &[3]], 3));
        for i in 1..3 {
            for u in enumerate_tableaux(&p(&[3, 1]), 3) {
                assert_eq!(promotion(&promotion_inv(&u, i).unwrap(), i).unwrap(), u);
            }
        }
    }

    #[test]
    fn small_evacuations() {
        for u in enumerate_tableaux(&p(&[2, 1]), 2) {
            assert_eq!(evacuation(&u), bender_knuth(&u, 1).unwrap());
            assert_eq!(d_operator(&u), bender_knuth(&u, 1).unwrap());
            assert_eq!(p_operator(&u), bender_knuth(&u, 1).unwrap());
        }
        for u in enumerate_tableaux(&p(&[2, 1]), 3) {
            let w = parse_word("t1 t2 t1", 3).unwrap();
            assert_eq!(evacuation(&u), apply_word(&w, &u).unwrap());
            assert_eq!(d_operator(&u), bender_knuth(&u, 2).unwrap());
            assert_eq!(
                p_operator(&u),
                apply_word(&parse_word("t1 t2", 3).unwrap(), &u).unwrap()
            );
            if d_operator(&u) == u {
                // t_2 fixes D-fixed tableaux, so P acts as t_1 there
                assert_eq!(p_operator(&u), bender_knuth(&u, 1).unwrap());
            }
            assert_eq!(partial_evacuation(&u, 1).unwrap(), u);
            assert_eq!(evacuation(&evacuation(&u)), u);
        }
        let t = tab(&[&[1, 2]], 2);
        assert_eq!(d_operator(&t), t);
        assert_eq!(p_operator(&t), t);
    }

    #[test]
    fn word_application() {
        let t = tab(&[&[1, 2, 2], &[3]], 3);
        assert_eq!(apply_word(&Word::default(), &t).unwrap(), t);
        assert_eq!(apply_word(&parse_word("t1 t1", 3).unwrap(), &t).unwrap(), t);
        assert_eq!(
            apply_word(&parse_word("P D P'", 3).unwrap(), &t).unwrap(),
            evacuation(&t)
        );
        assert_eq!(
            apply_word(&Word::single(Generator::T(3)), &t),
            Err(OperatorError::Word(WordError::IndexOutOfRange {
                token: "t3".into(),
                n: 3
            }))
        );
    }
}
