//! The involutions `s_i`, `σ_i` and `τ_k`.
//!
//! These are computed straight from their recursive definitions, one
//! Bender-Knuth step at a time, independently of the word expansion used by
//! [`crate::apply_word`].

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;

use crate::domino::{is_domino_fixed, DominoWeight};
use crate::operators::{apply_t_in_place, OperatorError};
use crate::partition::Partition;
use crate::tableau::{enumerate_tableaux_weight, Tableau};
use crate::verify::{kostka2, Bounds, Report, Witness};
use crate::word::{Generator, WordError};

fn check(g: Generator, t: &Tableau) -> Result<(), OperatorError> {
    if g.valid_for(t.n()) {
        Ok(())
    } else {
        Err(WordError::IndexOutOfRange {
            token: g.to_string(),
            n: t.n(),
        }
        .into())
    }
}

fn s_in_place(t: &mut Tableau, i: usize) {
    if i == 1 {
        apply_t_in_place(t, 1);
        return;
    }
    // s_i = p_i s_{i-1} p_i^{-1}, and p_i^{-1} = t_i ⋯ t_1 applies t_1 first
    for j in 1..=i {
        apply_t_in_place(t, j);
    }
    s_in_place(t, i - 1);
    for j in (1..=i).rev() {
        apply_t_in_place(t, j);
    }
}

/// `s_1 = t_1`, `s_i = p_i s_{i-1} p_i^{-1}`.
pub fn s_action(t: &Tableau, i: usize) -> Result<Tableau, OperatorError> {
    check(Generator::Switch(i), t)?;
    let mut out = t.clone();
    s_in_place(&mut out, i);
    Ok(out)
}

/// `σ_i = t_i s_{i-1} s_{i+1} t_i` for `2 ≤ i ≤ n-2`.
pub fn sigma_action(t: &Tableau, i: usize) -> Result<Tableau, OperatorError> {
    check(Generator::Sigma(i), t)?;
    let mut out = t.clone();
    apply_t_in_place(&mut out, i);
    s_in_place(&mut out, i + 1);
    s_in_place(&mut out, i - 1);
    apply_t_in_place(&mut out, i);
    Ok(out)
}

/// `τ_k = s_k s_{n-k}` for `1 ≤ k < ⌊n/2⌋`.
pub fn tau_action(t: &Tableau, k: usize) -> Result<Tableau, OperatorError> {
    check(Generator::Tau(k), t)?;
    let mut out = t.clone();
    s_in_place(&mut out, t.n() - k);
    s_in_place(&mut out, k);
    Ok(out)
}

/// Checks that `σ_{n-2i}` maps `Tab_λ^D(β′)` bijectively onto
/// `Tab_λ^D((i,i+1)β′)`.
pub fn domino_weight_action_check(
    shape: &Partition,
    weight: &DominoWeight,
    i: usize,
    n: usize,
) -> Report {
    let mut bounds = Bounds::single(shape, n);
    bounds.weight = Some(weight.0.clone());
    let mut rep = Report::new("eq110", bounds);
    if i == 0 || i >= n / 2 || weight.len() != n.div_ceil(2) || weight.cells(n) != shape.size() {
        return rep;
    }
    let j = n - 2 * i;
    let swapped = weight.swapped(i);
    let target = swapped.fixed_tableau_weight(n);
    let mut image = BTreeSet::new();
    for t in
        enumerate_tableaux_weight(shape, &weight.fixed_tableau_weight(n)).filter(is_domino_fixed)
    {
        rep.checked += 1;
        let u = sigma_action(&t, j).expect("index in range");
        if !is_domino_fixed(&u) || u.weight() != target {
            rep.fail(Witness {
                lhs: Some(u.clone()),
                ..Witness::at(format!("sigma{j} maps into Tab^D({swapped})"), &t)
            });
        }
        if !image.insert(u) {
            rep.fail(Witness::at(format!("sigma{j} is injective"), &t));
        }
    }
    let count = kostka2(shape, &swapped, n);
    if count != image.len() as u64 {
        rep.fail(Witness::note(
            format!("sigma{j} onto Tab^D({swapped})"),
            format!("image {} of {count}", image.len()),
        ));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{apply_word, bender_knuth, evacuation};
    use crate::partition::{partitions_in_box, Partition};
    use crate::tableau::enumerate_tableaux;
    use crate::word::parse_word;
    use alloc::vec::Vec;

    fn all(n: usize) -> Vec<Tableau> {
        partitions_in_box(3, 3)
            .filter(|p: &Partition| p.num_rows() <= n)
            .flat_map(|p| enumerate_tableaux(&p, n).collect::<Vec<_>>())
            .collect()
    }

    #[test]
    fn s1_is_t1_and_s2_word() {
        let w = parse_word("t1 t2 t1 t2 t1", 4).unwrap();
        for t in all(4) {
            assert_eq!(s_action(&t, 1).unwrap(), bender_knuth(&t, 1).unwrap());
            assert_eq!(s_action(&t, 2).unwrap(), apply_word(&w, &t).unwrap());
        }
    }

    #[test]
    fn matches_word_expansion() {
        for n in 2..=5 {
            for t in all(n) {
                for i in 1..n {
                    let w = parse_word(&alloc::format!("s{i}"), n).unwrap();
                    assert_eq!(s_action(&t, i).unwrap(), apply_word(&w, &t).unwrap());
                }
                for i in 2..n.saturating_sub(1) {
                    let w = parse_word(&alloc::format!("sigma{i}"), n).unwrap();
                    assert_eq!(sigma_action(&t, i).unwrap(), apply_word(&w, &t).unwrap());
                }
            }
        }
    }

    #[test]
    fn involutions_and_weights() {
        for t in all(5) {
            for i in 1..5 {
                let u = s_action(&t, i).unwrap();
                assert_eq!(s_action(&u, i).unwrap(), t);
                assert_eq!(u.weight(), t.weight().swapped(i));
            }
            for i in 2..=3 {
                let u = sigma_action(&t, i).unwrap();
                assert_eq!(sigma_action(&u, i).unwrap(), t);
                assert_eq!(u.shape(), t.shape());
            }
        }
    }

    #[test]
    fn tau_commutes_with_evacuation() {
        for t in all(6) {
            for k in 1..3 {
                let u = tau_action(&t, k).unwrap();
                assert_eq!(tau_action(&u, k).unwrap(), t);
                assert_eq!(evacuation(&u), tau_action(&evacuation(&t), k).unwrap());
            }
        }
    }

    #[test]
    fn domino_action_examples() {
        let l = Partition::new(alloc::vec![2, 2]).unwrap();
        let r = domino_weight_action_check(&l, &DominoWeight(alloc::vec![2, 0]), 1, 4);
        assert!(r.is_verified());
        assert_eq!(r.checked, kostka2(&l, &DominoWeight(alloc::vec![2, 0]), 4));
        let r = domino_weight_action_check(
            &Partition::new(alloc::vec![3]).unwrap(),
            &DominoWeight(alloc::vec![1, 0]),
            1,
            4,
        );
        assert!(r.is_verified());
        assert_eq!(r.checked, 0);
    }

    #[test]
    fn index_errors() {
        let t = Tableau::from_grid(&[alloc::vec![1, 2]], 4).unwrap();
        assert!(s_action(&t, 4).is_err());
        assert!(s_action(&t, 0).is_err());
        assert!(sigma_action(&t, 1).is_err());
        assert!(sigma_action(&t, 3).is_err());
        assert!(tau_action(&t, 2).is_err());
        assert!(tau_action(&t, 1).is_ok());
    }
}
