//! Brute-force reference implementations: bounded sieves and power-set
//! scans, deliberately naive and fully independent of the fast paths (the
//! membership logic here is a sieve, never the residue table).

use crate::algebra::SemigroupAlgebra;
use crate::error::{Error, Result};
use crate::exponent::{lcm, Exponent, MonomialSet};
use crate::semigroup::NumericalSemigroup;

/// Membership table of a bounded sieve over scaled integer exponents.
#[derive(Clone, Debug)]
pub struct BoundedSet {
    bound: u64,
    members: Vec<bool>,
}

impl BoundedSet {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn contains(&self, t: u64) -> bool {
        t <= self.bound && self.members[t as usize]
    }

    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        (0..=self.bound).filter(|&t| self.members[t as usize])
    }
}

/// Sieve of every nonnegative integer combination of `gens` up to `bound`.
pub fn bf_members(gens: &[u64], bound: u64) -> BoundedSet {
    let mut members = vec![false; bound as usize + 1];
    members[0] = true;
    for t in 0..=bound {
        if members[t as usize] {
            for &g in gens {
                if g > 0 && t + g <= bound {
                    members[(t + g) as usize] = true;
                }
            }
        }
    }
    BoundedSet { bound, members }
}

/// Both rings of an algebra sieved on one common integer grid. The bound is
/// `mult` times the square of the largest scaled generator, which dominates
/// every conductor in play for mult >= 2.
pub struct SieveTables {
    pub scale: u64,
    pub coeff: BoundedSet,
    pub ext: BoundedSet,
}

impl SieveTables {
    pub fn exponent(&self, t: u64) -> Exponent {
        Exponent::new(t, self.scale).unwrap()
    }
}

pub fn bf_tables(alg: &SemigroupAlgebra, mult: u64) -> SieveTables {
    let all = || {
        alg.ext()
            .generators()
            .iter()
            .chain(alg.coeff().generators())
    };
    let scale = all().fold(1u64, |l, g| lcm(l, g.denom()));
    let coeff_scaled: Vec<u64> = alg
        .coeff()
        .generators()
        .iter()
        .map(|g| g.scaled(scale).unwrap())
        .collect();
    let ext_scaled: Vec<u64> = alg
        .ext()
        .generators()
        .iter()
        .map(|g| g.scaled(scale).unwrap())
        .collect();
    let max_gen = *coeff_scaled.iter().chain(&ext_scaled).max().unwrap();
    let top = mult * max_gen * max_gen + 2;
    SieveTables {
        scale,
        coeff: bf_members(&coeff_scaled, top),
        ext: bf_members(&ext_scaled, top),
    }
}

/// Elements of `set` with no strict successor under `divides`.
pub fn bf_maximal(set: &MonomialSet, divides: impl Fn(Exponent, Exponent) -> bool) -> MonomialSet {
    set.iter()
        .filter(|&e| !set.iter().any(|f| f != e && divides(e, f)))
        .collect()
}

/// Gap exponents of the algebra computed purely with sieves.
pub fn bf_gap_monomials(alg: &SemigroupAlgebra) -> MonomialSet {
    let tabs = bf_tables(alg, 2);
    tabs.ext
        .members()
        .filter(|&t| !tabs.coeff.contains(t))
        .map(|t| tabs.exponent(t))
        .collect()
}

/// Largest exponent (scaled) in the bounded table that lies in R' but not in
/// R. Witness sums beyond it are sums of members, so scans may stop there.
fn last_gap(tabs: &SieveTables) -> u64 {
    let half = tabs.coeff.bound() / 2;
    tabs.ext
        .members()
        .take_while(|&t| t <= half)
        .filter(|&t| !tabs.coeff.contains(t))
        .max()
        .unwrap_or(0)
}

/// Sporadic exponents of the algebra computed purely with sieves: members s
/// of R with some extension member t keeping s + t outside R. Both s and the
/// witness t are bounded by the largest gap.
pub fn bf_sporadic_monomials(alg: &SemigroupAlgebra) -> MonomialSet {
    let tabs = bf_tables(alg, 2);
    let cutoff = last_gap(&tabs);
    let ext_small: Vec<u64> = tabs.ext.members().take_while(|&t| t <= cutoff).collect();
    tabs.coeff
        .members()
        .take_while(|&s| s <= cutoff)
        .filter(|&s| ext_small.iter().any(|&t| !tabs.coeff.contains(s + t)))
        .map(|t| tabs.exponent(t))
        .collect()
}

/// Exhaustive power-set scan over the gap exponents: every subset whose
/// union with the coefficient members is additively closed, as semigroups.
pub fn bf_all_intermediate(alg: &SemigroupAlgebra) -> Result<Vec<NumericalSemigroup>> {
    let gaps = bf_gap_monomials(alg);
    let m = gaps.len();
    if m > 16 {
        return Err(Error::TooManyGaps { gaps: m, limit: 16 });
    }
    let g: Vec<Exponent> = gaps.iter().collect();
    let tabs = bf_tables(alg, 2);
    let idx: Vec<u64> = g.iter().map(|e| e.scaled(tabs.scale).unwrap()).collect();

    // Sums past the table stay members automatically; within it, a sum of a
    // chosen gap with a gap or a nonzero member either lands in R or forces
    // another gap into the subset. Precompute those forcing targets once.
    let gap_index = |v: u64| idx.iter().position(|&t| t == v);
    let mut forced = vec![0u32; m];
    let mut pair_forced = vec![vec![None; m]; m];
    for i in 0..m {
        for j in 0..m {
            if let Some(k) = gap_index(idx[i] + idx[j]) {
                pair_forced[i][j] = Some(k);
            }
        }
        for (j, &t) in idx.iter().enumerate() {
            if t > idx[i] && tabs.coeff.contains(t - idx[i]) {
                forced[i] |= 1 << j;
            }
        }
    }

    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        let closed = (0..m).filter(|&i| mask & (1 << i) != 0).all(|i| {
            mask & forced[i] == forced[i]
                && (0..m)
                    .filter(|&j| mask & (1 << j) != 0)
                    .all(|j| pair_forced[i][j].is_none_or(|k| mask & (1 << k) != 0))
        });
        if closed {
            let mut gens: Vec<Exponent> = alg.coeff().generators().to_vec();
            gens.extend((0..m).filter(|&i| mask & (1 << i) != 0).map(|i| g[i]));
            out.push(NumericalSemigroup::from_generators(&gens)?);
        }
    }
    Ok(out)
}

/// Minimal monomial generators of the conductor over the extension, straight
/// from the definition on sieve tables.
pub fn bf_conductor_min_generators(alg: &SemigroupAlgebra) -> MonomialSet {
    let tabs = bf_tables(alg, 2);
    let cutoff = last_gap(&tabs);
    let ext_small: Vec<u64> = tabs.ext.members().take_while(|&t| t <= cutoff).collect();
    let in_cond =
        |s: u64| tabs.coeff.contains(s) && ext_small.iter().all(|&t| tabs.coeff.contains(s + t));
    // Minimal generators over R' lie within one extension multiplicity of
    // the coefficient ring's conductor on its own grid.
    let half = tabs.coeff.bound() / 2;
    let content = tabs
        .coeff
        .members()
        .filter(|&t| t > 0)
        .fold(0, crate::exponent::gcd);
    let grid_frob = (0..=half)
        .filter(|&t| content > 0 && t % content == 0 && !tabs.coeff.contains(t))
        .max()
        .unwrap_or(0);
    let top = grid_frob + 1 + tabs.ext.members().find(|&t| t > 0).unwrap_or(1);
    let elements: Vec<u64> = (0..=top).filter(|&s| in_cond(s)).collect();
    elements
        .iter()
        .copied()
        .filter(|&s| !elements.iter().any(|&t| t < s && tabs.ext.contains(s - t)))
        .map(|s| tabs.exponent(s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(gens: &[u64]) -> NumericalSemigroup {
        let exps: Vec<Exponent> = gens.iter().map(|&g| Exponent::from_int(g)).collect();
        NumericalSemigroup::from_generators(&exps).unwrap()
    }

    fn joined(base: &[u64], extra: &[u64]) -> SemigroupAlgebra {
        let add: Vec<Exponent> = extra.iter().map(|&g| Exponent::from_int(g)).collect();
        SemigroupAlgebra::by_joining(ns(base), &add).unwrap()
    }

    #[test]
    fn sieve_values() {
        let t = bf_members(&[3, 5], 12);
        let got: Vec<u64> = t.members().collect();
        assert_eq!(got, vec![0, 3, 5, 6, 8, 9, 10, 11, 12]);

        let n = bf_members(&[1], 5);
        assert_eq!(n.members().count(), 6);

        let s = bf_members(&[4, 6, 9], 12);
        let got: Vec<u64> = s.members().collect();
        assert_eq!(got, vec![0, 4, 6, 8, 9, 10, 12]);
    }

    #[test]
    fn maximal_with_divides() {
        let set = MonomialSet::from_ints(&[3, 6, 8, 9]);
        let r = ns(&[5, 7, 11, 13]);
        let pf = bf_maximal(&set, |s, t| t.checked_sub(s).is_some_and(|d| r.contains(d)));
        assert_eq!(pf, MonomialSet::from_ints(&[6, 8, 9]));

        let r_ext = ns(&[3, 5, 7]);
        let f = bf_maximal(&set, |s, t| {
            t.checked_sub(s).is_some_and(|d| r_ext.contains(d))
        });
        assert_eq!(f, MonomialSet::from_ints(&[8, 9]));

        assert!(bf_maximal(&MonomialSet::new(), |_, _| true).is_empty());
    }

    #[test]
    fn bf_sets_match_fast_path() {
        for (base, extra) in [
            (vec![4u64, 6, 9], vec![5u64]),
            (vec![5, 7, 11, 13], vec![3]),
            (vec![8, 12, 19, 21], vec![22]),
        ] {
            let alg = joined(&base, &extra);
            assert_eq!(bf_gap_monomials(&alg), alg.gap_monomials().unwrap());
            assert_eq!(
                bf_sporadic_monomials(&alg),
                alg.sporadic_monomials().unwrap()
            );
        }
    }

    #[test]
    fn rational_grid_tables_share_scale() {
        let coeff = NumericalSemigroup::from_generators(&[
            Exponent::new(3, 2).unwrap(),
            Exponent::new(5, 2).unwrap(),
        ])
        .unwrap();
        let alg = SemigroupAlgebra::by_joining(coeff, &[Exponent::new(7, 2).unwrap()]).unwrap();
        assert_eq!(bf_gap_monomials(&alg), alg.gap_monomials().unwrap());
    }

    #[test]
    fn intermediate_counts() {
        let a = SemigroupAlgebra::new(ns(&[5, 6]), ns(&[5, 6, 19])).unwrap();
        assert_eq!(bf_all_intermediate(&a).unwrap().len(), 2);

        let b = joined(&[5, 6, 13], &[7, 8]);
        assert_eq!(bf_all_intermediate(&b).unwrap().len(), 5);

        let t = SemigroupAlgebra::new(ns(&[5, 6]), ns(&[5, 6])).unwrap();
        assert_eq!(bf_all_intermediate(&t).unwrap().len(), 1);
    }

    #[test]
    fn conductor_oracle_matches() {
        let a = SemigroupAlgebra::new(ns(&[4, 6, 7, 9]), ns(&[2, 5])).unwrap();
        assert_eq!(
            bf_conductor_min_generators(&a),
            MonomialSet::from_ints(&[4, 7])
        );
    }
}
