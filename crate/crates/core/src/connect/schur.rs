//! Schur connected sums: harmonic diagonal chains below a pivot diagonal,
//! flat layer chains above it, joined by a determinant connector, and the
//! transport chain that walks the pivot from the last diagonal down to the
//! flat boundary.

use crate::combinat::{rel_strict, rel_weak, DiagIndex, IntTuple};
use crate::error::{Error, Result};
use crate::exactq::RatFun;
use crate::exactq::accum::FracSum;
use crate::exactq::QPoly;
use crate::sums::schur::{all_tuples, flat_layer_term, harmonic_tuple_term, Layer};
use crate::sums::{schur_bz, schur_qflat, NumeratorReading};

use super::{det_connector, ConnectorKind};

/// Z(K; a): diagonals p0..a carry harmonic weights on a strict chain of
/// tuples, diagonals a+1..p1 carry the flat layer chain, and the chain ends
/// meet in D(m_a, n_{a+1}^{(1)} - 1).
///
/// The two extreme pivots are definitions: a = p1 is the Schur harmonic sum
/// and a = p0 - 1 the Schur flat sum. Caching is per diagonal: each side is
/// folded into a table indexed by the boundary tuple before the determinant
/// couples them.
pub fn connected_sum_schur(
    kk: &DiagIndex,
    a: i64,
    upper: u32,
    reading: NumeratorReading,
) -> Result<RatFun> {
    let Some((p0, p1)) = kk.shape().p_range() else {
        return Ok(RatFun::one());
    };
    if a == p1 {
        return Ok(schur_bz(kk, upper));
    }
    if a == p0 - 1 {
        return Ok(schur_qflat(kk, upper, reading));
    }
    if !(p0 <= a && a < p1) {
        return Err(Error::Usage(format!(
            "pivot {a} outside [{}, {}]",
            p0 - 1,
            p1
        )));
    }
    if upper <= 1 {
        return Ok(RatFun::zero());
    }

    // Harmonic side: fold diagonals p0..=a into a table over tuples of J_a.
    let mut m_side: Option<(Vec<IntTuple>, Vec<FracSum>)> = None;
    for (p, iv) in kk.shape().diagonals() {
        if *p > a {
            break;
        }
        let tuples = all_tuples(*iv, upper);
        let k = kk.weight_of(*p);
        let mut vals = Vec::with_capacity(tuples.len());
        for tuple in &tuples {
            let (exp, den) = harmonic_tuple_term(tuple, k);
            let v = match &m_side {
                None => FracSum::from_term(QPoly::q_pow(exp), den),
                Some((ptuples, pvals)) => {
                    let mut acc = FracSum::new();
                    for (pt, pv) in ptuples.iter().zip(pvals) {
                        if !pv.is_zero() && rel_strict(pt, tuple)? {
                            acc.add_frac(pv);
                        }
                    }
                    acc.mul_term(&QPoly::q_pow(exp), &den)
                }
            };
            vals.push(v);
        }
        m_side = Some((tuples, vals));
    }
    let (m_tuples, m_vals) = m_side.expect("pivot at or above the first diagonal");

    // Flat side, folded backwards: table over the first layer tuples of
    // diagonal a+1.
    let layers: Vec<Layer> = {
        let mut out = Vec::new();
        for (p, iv) in kk.shape().diagonals() {
            if *p <= a {
                continue;
            }
            for l in 1..=kk.weight_of(*p) {
                out.push(Layer {
                    interval: *iv,
                    l,
                    crosses: l == 1,
                });
            }
        }
        out
    };
    let mut n_side: Option<(Vec<IntTuple>, Vec<FracSum>)> = None;
    for (i, layer) in layers.iter().enumerate().rev() {
        let tuples = all_tuples(layer.interval, upper);
        let next_crosses = layers.get(i + 1).map(|l| l.crosses);
        let mut vals = Vec::with_capacity(tuples.len());
        for tuple in &tuples {
            let (exp, den) = flat_layer_term(tuple, layer.l, reading, upper);
            let v = match &n_side {
                None => FracSum::from_term(QPoly::q_pow(exp), den),
                Some((ntuples, nvals)) => {
                    let crosses = next_crosses.expect("inner layer has a successor");
                    let mut acc = FracSum::new();
                    for (nt, nv) in ntuples.iter().zip(nvals) {
                        if nv.is_zero() {
                            continue;
                        }
                        let ok = if crosses {
                            rel_strict(tuple, nt)?
                        } else {
                            rel_weak(tuple, nt)?
                        };
                        if ok {
                            acc.add_frac(nv);
                        }
                    }
                    acc.mul_term(&QPoly::q_pow(exp), &den)
                }
            };
            vals.push(v);
        }
        n_side = Some((tuples, vals));
    }
    let (n_tuples, n_vals) = n_side.expect("pivot below the last diagonal");

    let mut total = FracSum::new();
    for (mt, mv) in m_tuples.iter().zip(&m_vals) {
        if mv.is_zero() {
            continue;
        }
        for (nt, nv) in n_tuples.iter().zip(&n_vals) {
            if nv.is_zero() {
                continue;
            }
            let d = det_connector(ConnectorKind::Schur, mt, &nt.shifted(-1), upper)?;
            if d.is_zero() {
                continue;
            }
            total.add_frac(&mv.mul_ratfun(&d).mul_frac(nv));
        }
    }
    Ok(total.value())
}

/// One member of a Schur transport chain.
#[derive(Clone, Debug)]
pub struct SchurTransportStep {
    pub pivot: i64,
    pub value: RatFun,
    pub equal_to_previous: Option<bool>,
}

/// Walk the pivot from the harmonic boundary down to the flat boundary and
/// report equality at every step.
pub fn transport_check_schur(
    kk: &DiagIndex,
    upper: u32,
    reading: NumeratorReading,
) -> Result<Vec<SchurTransportStep>> {
    let Some((p0, p1)) = kk.shape().p_range() else {
        return Ok(vec![SchurTransportStep {
            pivot: 0,
            value: RatFun::one(),
            equal_to_previous: None,
        }]);
    };
    let mut steps: Vec<SchurTransportStep> = Vec::new();
    let mut a = p1;
    while a >= p0 - 1 {
        let value = connected_sum_schur(kk, a, upper, reading)?;
        let equal_to_previous = steps.last().map(|prev| prev.value == value);
        steps.push(SchurTransportStep {
            pivot: a,
            value,
            equal_to_previous,
        });
        a -= 1;
    }
    Ok(steps)
}

/// True when every link of the chain is an equality.
pub fn schur_chain_is_constant(steps: &[SchurTransportStep]) -> bool {
    steps.iter().all(|s| s.equal_to_previous != Some(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{LinearIndex, SkewShape};
    use crate::exactq::{rat_int, QPoly};
    use crate::sums::{zeta_bz, zeta_bz_star};

    fn idx(parts: &[u32]) -> LinearIndex {
        LinearIndex::new(parts.to_vec()).unwrap()
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFun {
        RatFun::new(
            QPoly::from_coeffs(num.iter().map(|&c| rat_int(c)).collect()),
            QPoly::from_coeffs(den.iter().map(|&c| rat_int(c)).collect()),
        )
        .unwrap()
    }

    const READING: NumeratorReading = NumeratorReading::FirstPlain;

    #[test]
    fn boundaries_defer_to_the_sums() {
        let kk = DiagIndex::from_column(&idx(&[1, 2]));
        for upper in 2..=4u32 {
            assert_eq!(
                connected_sum_schur(&kk, 1, upper, READING).unwrap(),
                zeta_bz(&idx(&[1, 2]), upper)
            );
            assert_eq!(
                connected_sum_schur(&kk, -1, upper, READING).unwrap(),
                schur_qflat(&kk, upper, READING)
            );
        }
    }

    #[test]
    fn pivot_out_of_range_is_usage_error() {
        let kk = DiagIndex::from_column(&idx(&[1, 1]));
        assert!(matches!(
            connected_sum_schur(&kk, 5, 3, READING),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn column_chain_replays_the_linear_proof() {
        // Column (1,2): the chain is constant at zeta_bz((1,2), upper).
        let kk = DiagIndex::from_column(&idx(&[1, 2]));
        for upper in 1..=4u32 {
            let steps = transport_check_schur(&kk, upper, READING).unwrap();
            assert!(schur_chain_is_constant(&steps), "upper {upper}: {steps:?}");
            assert_eq!(steps[0].value, zeta_bz(&idx(&[1, 2]), upper));
            // Pivots 1, 0, -1 for the two diagonals of the column.
            assert_eq!(steps.len(), 3);
        }
    }

    #[test]
    fn row_chain_is_constant_at_the_star_value() {
        // Row (1,2) at upper 3: constant at q + q^2/[2]^2 + q^2/[2]^3.
        let kk = DiagIndex::from_row(&idx(&[1, 2]));
        let golden = {
            let two = rf(&[1, 1], &[1]);
            let t2 = RatFun::q_pow(2).div(&two.pow(2)).unwrap();
            let t3 = RatFun::q_pow(2).div(&two.pow(3)).unwrap();
            &(&RatFun::q() + &t2) + &t3
        };
        let steps = transport_check_schur(&kk, 3, READING).unwrap();
        assert!(schur_chain_is_constant(&steps), "{steps:?}");
        for s in &steps {
            assert_eq!(s.value, golden, "pivot {}", s.pivot);
        }
        assert_eq!(steps[0].value, zeta_bz_star(&idx(&[1, 2]), 3));
    }

    #[test]
    fn corner_chain_is_constant() {
        let corner = SkewShape::new([(1, 2), (2, 1), (2, 2)]).unwrap();
        let kk = DiagIndex::uniform(corner, 1).unwrap();
        for upper in 2..=4u32 {
            let steps = transport_check_schur(&kk, upper, READING).unwrap();
            assert!(schur_chain_is_constant(&steps), "upper {upper}: {steps:?}");
        }
    }

    #[test]
    fn wide_diagonal_chain_is_constant_under_plain_first() {
        let square = SkewShape::new([(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap();
        for k in 1..=2u32 {
            let kk = DiagIndex::uniform(square.clone(), k).unwrap();
            for upper in 2..=4u32 {
                let steps = transport_check_schur(&kk, upper, READING).unwrap();
                assert!(
                    schur_chain_is_constant(&steps),
                    "k {k} upper {upper}: {steps:?}"
                );
            }
        }
    }

    #[test]
    fn single_cell_chain() {
        let kk = DiagIndex::uniform(SkewShape::new([(1, 1)]).unwrap(), 1).unwrap();
        let steps = transport_check_schur(&kk, 3, READING).unwrap();
        // Pivots 0 and -1: harmonic and flat boundaries only.
        assert_eq!(steps.len(), 2);
        assert!(schur_chain_is_constant(&steps));
        assert_eq!(steps[0].value, rf(&[2, 1], &[1, 1]));
    }
}
