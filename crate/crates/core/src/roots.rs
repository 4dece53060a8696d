//! Exact evaluation at primitive roots of unity and the duality identity:
//! the harmonic q-sum at a primitive root of its own level equals, up to
//! the sign (-1)^depth, the flat-style sum with every denominator reflected
//! into a plain q-integer. Everything runs in Q[q]/(Phi_N); there is no
//! complex embedding anywhere.

use crate::combinat::LinearIndex;
use crate::error::{Error, Result};
use crate::exactq::{q_integer, to_cyclo, Cyclo, RatFun};
use crate::sums::{zeta_bz, zeta_qflat};

/// One instance of the duality check: an index at a level >= 2. Level 1 is
/// rejected since the first cyclotomic polynomial kills every q-integer.
#[derive(Clone, Debug)]
pub struct DualityInstance {
    pub index: LinearIndex,
    pub level: u32,
}

impl DualityInstance {
    pub fn new(index: LinearIndex, level: u32) -> Result<Self> {
        if level < 2 {
            return Err(Error::Usage("duality level must be at least 2".into()));
        }
        Ok(DualityInstance { index, level })
    }
}

/// The harmonic q-sum evaluated at a primitive root of its own level. No
/// pole can occur: every denominator is a product of [m]_q with
/// 1 <= m < level, none of which vanish at a primitive level-th root.
pub fn bz_at_root(k: &LinearIndex, level: u32) -> Result<Cyclo> {
    if level < 2 {
        return Err(Error::Usage("duality level must be at least 2".into()));
    }
    to_cyclo(&zeta_bz(k, level), level)
}

/// The flat q-sum evaluated at the same root; equal to `bz_at_root` by the
/// harmonic/flat identity.
pub fn qflat_at_root(k: &LinearIndex, level: u32) -> Result<Cyclo> {
    if level < 2 {
        return Err(Error::Usage("duality level must be at least 2".into()));
    }
    to_cyclo(&zeta_qflat(k, level), level)
}

/// The duality right-hand side, computed directly in the cyclotomic field:
/// (-1)^r times the sum over the flat region of
/// prod_j z^{n_{j1}+...+n_{jk_j}} / ([n_{j1}] ... [n_{jk_j}]) with z the
/// primitive root. Every coordinate contributes its full power of the root
/// and a plain q-integer denominator.
pub fn duality_rhs(k: &LinearIndex, level: u32) -> Result<Cyclo> {
    if level < 2 {
        return Err(Error::Usage("duality level must be at least 2".into()));
    }
    if k.is_empty() {
        return Ok(Cyclo::one(level));
    }
    let root = Cyclo::root(level);
    let hi = level as i64 - 1;
    // Inverses of [1], ..., [level-1] at the root, shared by all terms.
    let mut inv: Vec<Cyclo> = Vec::with_capacity(hi as usize + 1);
    inv.push(Cyclo::zero(level)); // unused slot for index 0
    for v in 1..=hi {
        inv.push(
            to_cyclo(&RatFun::recip_poly(&q_integer(v as u32))?, level)
                .expect("[v] does not vanish at the root for v < level"),
        );
    }

    fn descend(
        blocks: &[u32],
        t_in_block: u32,
        lo: i64,
        hi: i64,
        acc: &Cyclo,
        exp: u64,
        root: &Cyclo,
        inv: &[Cyclo],
        total: &mut Cyclo,
    ) {
        match blocks.split_first() {
            None => {
                let power = root.pow((exp % u64::from(root.level())) as u32);
                *total = &*total + &(acc * &power);
            }
            Some((&kj, rest)) => {
                for v in lo..=hi {
                    let acc = acc * &inv[v as usize];
                    let exp = exp + v as u64;
                    if t_in_block + 1 < kj {
                        descend(blocks, t_in_block + 1, v, hi, &acc, exp, root, inv, total);
                    } else {
                        // strict join to the next block
                        descend(rest, 0, v + 1, hi, &acc, exp, root, inv, total);
                    }
                }
            }
        }
    }
    let mut total = Cyclo::zero(level);
    descend(
        k.parts(),
        0,
        1,
        hi,
        &Cyclo::one(level),
        0,
        &root,
        &inv,
        &mut total,
    );
    if k.depth() % 2 == 1 {
        total = -&total;
    }
    Ok(total)
}

/// Three-way duality check: harmonic at the root, flat at the root, and the
/// direct right-hand side must coincide.
pub fn verify_duality(inst: &DualityInstance) -> Result<bool> {
    let lhs = bz_at_root(&inst.index, inst.level)?;
    let via_flat = qflat_at_root(&inst.index, inst.level)?;
    let rhs = duality_rhs(&inst.index, inst.level)?;
    Ok(lhs == via_flat && lhs == rhs)
}

/// The reflection identity behind the duality: 1/[level-n] + z^n/[n] = 0
/// at a primitive root z, for 0 < n < level.
pub fn reflection_holds(n: u32, level: u32) -> Result<bool> {
    if !(0 < n && n < level) {
        return Err(Error::Usage(format!("need 0 < n < {level}, got {n}")));
    }
    let lhs = to_cyclo(&RatFun::recip_poly(&q_integer(level - n))?, level)?;
    let zn = Cyclo::root(level).pow(n);
    let inv_n = to_cyclo(&RatFun::recip_poly(&q_integer(n))?, level)?;
    Ok((&lhs + &(&zn * &inv_n)).is_zero())
}

/// Galois stability: mapping a verified instance through q -> q^a for any
/// a coprime to the level must keep both sides equal. One verified
/// embedding plus this stability covers every primitive root of the level.
pub fn verify_duality_galois(inst: &DualityInstance, a: u32) -> Result<bool> {
    let lhs = bz_at_root(&inst.index, inst.level)?;
    let rhs = duality_rhs(&inst.index, inst.level)?;
    Ok(lhs.galois(a) == rhs.galois(a))
}
