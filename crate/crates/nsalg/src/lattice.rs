//! The lattice of extensions of a coefficient ring inside an ambient ring:
//! enumeration over gap subsets, brute-force intersection-irreducibility,
//! greedy irreducible covers with a prescribed Frobenius monomial, and
//! decomposition into irreducible extensions.

use crate::algebra::SemigroupAlgebra;
use crate::classify;
use crate::error::{Error, Result};
use crate::exponent::{Exponent, MonomialSet};
use crate::semigroup::NumericalSemigroup;

/// Default cap on the gap count for subset enumeration; overridable per call
/// and via the CLI.
pub const DEFAULT_GAP_LIMIT: usize = 20;

/// Budget of candidate combinations examined by the minimal decomposition
/// search before falling back to the greedy cover construction.
const DECOMPOSE_BUDGET: usize = 200_000;

/// One extension in the lattice: the ring together with the subset of the
/// base gap set it absorbs, as a bitmask over the sorted gap list.
#[derive(Clone, Debug)]
pub struct Extension {
    pub ring: NumericalSemigroup,
    pub gap_mask: u32,
}

/// All extensions of R inside R'': every subset of the gap set whose union
/// with R is additively closed, including the trivial ones R and R''.
#[derive(Clone, Debug)]
pub struct ExtensionLattice {
    gaps: MonomialSet,
    extensions: Vec<Extension>,
}

impl ExtensionLattice {
    pub fn gaps(&self) -> &MonomialSet {
        &self.gaps
    }

    pub fn extensions(&self) -> &[Extension] {
        &self.extensions
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    /// Extensions other than R and R''.
    pub fn non_trivial(&self) -> impl Iterator<Item = &Extension> {
        let full: u32 = if self.gaps.is_empty() {
            0
        } else {
            (1u32 << self.gaps.len()) - 1
        };
        self.extensions
            .iter()
            .filter(move |e| e.gap_mask != 0 && e.gap_mask != full)
    }

    pub fn find_mask(&self, ring: &NumericalSemigroup) -> Option<u32> {
        self.extensions
            .iter()
            .find(|e| &e.ring == ring)
            .map(|e| e.gap_mask)
    }
}

/// Enumerates every extension of alg.coeff() in alg.ext() with the default
/// gap limit.
pub fn enumerate_extensions(alg: &SemigroupAlgebra) -> Result<ExtensionLattice> {
    enumerate_extensions_with_limit(alg, DEFAULT_GAP_LIMIT)
}

/// Subset DFS over the gap exponents in decreasing order. Including a gap
/// forces every gap reachable from it by adding a gap or a nonzero member of
/// R; those targets are always larger, hence already decided, which prunes
/// inconsistent branches immediately.
pub fn enumerate_extensions_with_limit(
    alg: &SemigroupAlgebra,
    limit: usize,
) -> Result<ExtensionLattice> {
    let gaps = alg.gap_monomials()?;
    let m = gaps.len();
    if m > limit.min(31) {
        return Err(Error::TooManyGaps {
            gaps: m,
            limit: limit.min(31),
        });
    }
    let g: Vec<Exponent> = gaps.iter().collect();

    // sum_target[i][j] = index of g_i + g_j when that sum is itself a gap.
    let mut sum_target = vec![Vec::new(); m];
    let mut forced_by_ring = vec![Vec::new(); m];
    for i in 0..m {
        for j in i..m {
            if let Ok(k) = g.binary_search(&(g[i] + g[j])) {
                sum_target[i].push((j, k));
            }
        }
        for (j, &t) in g.iter().enumerate() {
            if j != i {
                if let Some(d) = t.checked_sub(g[i]) {
                    if !d.is_zero() && alg.coeff().contains(d) {
                        forced_by_ring[i].push(j);
                    }
                }
            }
        }
    }

    let mut masks: Vec<u32> = Vec::new();
    let mut stack: Vec<(usize, u32)> = vec![(m, 0)];
    while let Some((idx, chosen)) = stack.pop() {
        if idx == 0 {
            masks.push(chosen);
            continue;
        }
        let i = idx - 1;
        // Branch 1: leave g_i out. Exclusions never violate closure.
        stack.push((i, chosen));
        // Branch 2: take g_i if every forced target is already chosen.
        let ring_ok = forced_by_ring[i].iter().all(|&j| chosen & (1 << j) != 0);
        let sums_ok = sum_target[i].iter().all(|&(j, k)| {
            let j_in = j == i || chosen & (1 << j) != 0;
            !j_in || chosen & (1 << k) != 0
        });
        if ring_ok && sums_ok {
            stack.push((i, chosen | (1 << i)));
        }
    }
    masks.sort_unstable();

    let extensions = masks
        .into_iter()
        .map(|mask| {
            let extra: Vec<Exponent> = (0..m)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| g[i])
                .collect();
            Ok(Extension {
                ring: alg.coeff().join(&extra)?,
                gap_mask: mask,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(ExtensionLattice { gaps, extensions })
}

/// Brute-force irreducibility: R is irreducible in R'' when no two
/// non-trivial extensions intersect back to R, i.e. no two valid nonzero gap
/// subsets are disjoint. Serves as the oracle for the classification-based
/// criterion.
pub fn is_intersection_irreducible_bf(alg: &SemigroupAlgebra) -> Result<bool> {
    let lattice = enumerate_extensions(alg)?;
    let masks: Vec<u32> = lattice
        .extensions()
        .iter()
        .map(|e| e.gap_mask)
        .filter(|&m| m != 0)
        .collect();
    for (i, &a) in masks.iter().enumerate() {
        for &b in &masks[i + 1..] {
            if a & b == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Greedy irreducible cover: starting from R with u^w a Frobenius monomial of
/// R''/R, repeatedly join the smallest pseudo-Frobenius exponent that is not
/// a radical of w. Each join keeps w a Frobenius monomial and strictly
/// shrinks the gap set, so the loop terminates with PF inside {w, w/2}.
pub fn irreducible_cover(alg: &SemigroupAlgebra, w: Exponent) -> Result<NumericalSemigroup> {
    Ok(irreducible_cover_trace(alg, w)?.0)
}

/// Like [`irreducible_cover`] but also reports the joined exponents in order.
pub fn irreducible_cover_trace(
    alg: &SemigroupAlgebra,
    w: Exponent,
) -> Result<(NumericalSemigroup, MonomialSet)> {
    if !alg.frobenius_monomials()?.contains(w) {
        return Err(Error::NotFrobenius);
    }
    let is_radical_of_w = |e: Exponent| w.ratio_int(e).is_some();
    let mut ring = alg.coeff().clone();
    let mut joined = Vec::new();
    loop {
        let cur = SemigroupAlgebra::new(ring.clone(), alg.ext().clone())?;
        let pf = cur.pseudo_frobenius_monomials()?;
        if pf.iter().all(|e| e == w || e == w.half()) {
            return Ok((ring, MonomialSet::from_vec(joined)));
        }
        let next = pf
            .iter()
            .find(|&e| !is_radical_of_w(e))
            .expect("a non-radical pseudo-Frobenius exponent exists while PF exceeds {w, w/2}");
        joined.push(next);
        ring = ring.join(&[next])?;
    }
}

/// Expresses R as an intersection of irreducible extensions inside R'',
/// searching for the fewest components and falling back to one maximal
/// avoiding extension per gap when the search budget runs out.
pub fn decompose_irreducible(alg: &SemigroupAlgebra) -> Result<Vec<NumericalSemigroup>> {
    decompose_irreducible_with_limit(alg, DEFAULT_GAP_LIMIT)
}

pub fn decompose_irreducible_with_limit(
    alg: &SemigroupAlgebra,
    limit: usize,
) -> Result<Vec<NumericalSemigroup>> {
    let gaps = alg.gap_monomials()?;
    if gaps.is_empty() {
        return Ok(vec![alg.coeff().clone()]);
    }
    if classify_irreducible(alg)? {
        return Ok(vec![alg.coeff().clone()]);
    }
    let lattice = enumerate_extensions_with_limit(alg, limit)?;
    let mut candidates: Vec<&Extension> = Vec::new();
    for ext in lattice.extensions() {
        if ext.gap_mask == 0 {
            continue;
        }
        let sub = SemigroupAlgebra::new(ext.ring.clone(), alg.ext().clone())?;
        if sub.is_trivial() || classify_irreducible(&sub)? {
            candidates.push(ext);
        }
    }
    // Wider masks exclude fewer gaps but intersect closer to R; sort so the
    // subset search tries large extensions first.
    candidates.sort_by_key(|e| std::cmp::Reverse(e.gap_mask.count_ones()));

    if let Some(best) = min_cover(&candidates, DECOMPOSE_BUDGET) {
        let mut rings: Vec<NumericalSemigroup> = best.iter().map(|e| e.ring.clone()).collect();
        rings.sort_by(|a, b| a.minimal_generators().cmp(b.minimal_generators()));
        return Ok(rings);
    }

    // Fallback: for every gap pick a maximal extension avoiding it; such
    // extensions are irreducible and their masks intersect to zero.
    let mut picks: Vec<u32> = Vec::new();
    for i in 0..gaps.len() {
        let bit = 1u32 << i;
        let best = candidates
            .iter()
            .filter(|e| e.gap_mask & bit == 0)
            .max_by_key(|e| e.gap_mask.count_ones())
            .expect("a reducible ring has, for every gap, an irreducible extension avoiding it");
        if !picks.contains(&best.gap_mask) {
            picks.push(best.gap_mask);
        }
    }
    let mut rings: Vec<NumericalSemigroup> = picks
        .into_iter()
        .map(|mask| {
            candidates
                .iter()
                .find(|e| e.gap_mask == mask)
                .unwrap()
                .ring
                .clone()
        })
        .collect();
    rings.sort_by(|a, b| a.minimal_generators().cmp(b.minimal_generators()));
    Ok(rings)
}

fn classify_irreducible(alg: &SemigroupAlgebra) -> Result<bool> {
    Ok(classify::classify(alg)?.irreducible)
}

/// Smallest set of candidate masks whose intersection is empty, by exhaustive
/// search over subset sizes 2, 3, ... within the budget. A pick that does not
/// shrink the running intersection is skipped: a decomposition using it would
/// have been found at a smaller size.
fn min_cover<'a>(candidates: &[&'a Extension], budget: usize) -> Option<Vec<&'a Extension>> {
    fn search(
        masks: &[u32],
        start: usize,
        left: usize,
        acc: u32,
        picked: &mut Vec<usize>,
        spent: &mut usize,
        budget: usize,
    ) -> Option<Vec<usize>> {
        if acc == 0 {
            return Some(picked.clone());
        }
        if left == 0 {
            return None;
        }
        for i in start..masks.len() {
            *spent += 1;
            if *spent > budget {
                return None;
            }
            let next = acc & masks[i];
            if next == acc {
                continue;
            }
            picked.push(i);
            if let Some(hit) = search(masks, i + 1, left - 1, next, picked, spent, budget) {
                return Some(hit);
            }
            picked.pop();
        }
        None
    }

    let masks: Vec<u32> = candidates.iter().map(|e| e.gap_mask).collect();
    let mut spent = 0usize;
    for size in 2..=masks.len().min(6) {
        let mut picked = Vec::new();
        if let Some(hit) = search(&masks, 0, size, u32::MAX, &mut picked, &mut spent, budget) {
            return Some(hit.into_iter().map(|i| candidates[i]).collect());
        }
        if spent > budget {
            return None;
        }
    }
    None
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

    fn e(n: u64) -> Exponent {
        Exponent::from_int(n)
    }

    #[test]
    fn three_nontrivial_extensions() {
        let a = joined(&[5, 6, 13], &[7, 8]);
        let lat = enumerate_extensions(&a).unwrap();
        assert_eq!(lat.gaps(), &MonomialSet::from_ints(&[7, 8, 14]));
        assert_eq!(lat.len(), 5);
        let nontrivial: Vec<&Extension> = lat.non_trivial().collect();
        assert_eq!(nontrivial.len(), 3);
        let rings: Vec<&NumericalSemigroup> = nontrivial.iter().map(|e| &e.ring).collect();
        assert!(rings.contains(&&ns(&[5, 6, 13]).join(&[e(7)]).unwrap()));
        assert!(rings.contains(&&ns(&[5, 6, 13]).join(&[e(8)]).unwrap()));
        assert!(rings.contains(&&ns(&[5, 6, 13]).join(&[e(14)]).unwrap()));
    }

    #[test]
    fn only_trivial_extensions() {
        let a = SemigroupAlgebra::new(ns(&[5, 6]), ns(&[5, 6, 19])).unwrap();
        let lat = enumerate_extensions(&a).unwrap();
        assert_eq!(lat.len(), 2);
        assert_eq!(lat.non_trivial().count(), 0);
    }

    #[test]
    fn five_6_14_extensions() {
        // The gap subset {13} is additively closed with R as well, so the
        // lattice holds three non-trivial extensions; <5,6,13,14> is the
        // intersection of the other two.
        let a = SemigroupAlgebra::new(ns(&[5, 6, 14]), ns(&[5, 6, 7, 8])).unwrap();
        let lat = enumerate_extensions(&a).unwrap();
        let nontrivial: Vec<&Extension> = lat.non_trivial().collect();
        assert_eq!(nontrivial.len(), 3);
        let rings: Vec<&NumericalSemigroup> = nontrivial.iter().map(|e| &e.ring).collect();
        assert!(rings.contains(&&ns(&[5, 6, 7])));
        assert!(rings.contains(&&ns(&[5, 6, 8])));
        assert!(rings.contains(&&ns(&[5, 6, 13, 14])));
    }

    #[test]
    fn irreducibility_examples() {
        // Every non-trivial extension of <5,7,9> in R[8] contains u^13.
        let a = joined(&[5, 7, 9], &[8]);
        assert_eq!(a.gap_monomials().unwrap(), MonomialSet::from_ints(&[8, 13]));
        assert!(is_intersection_irreducible_bf(&a).unwrap());

        let b = joined(&[5, 7, 9], &[8, 11]);
        assert!(!is_intersection_irreducible_bf(&b).unwrap());

        let c = joined(&[8, 12, 19, 21], &[22]);
        assert!(!is_intersection_irreducible_bf(&c).unwrap());
    }

    #[test]
    fn cover_joins_30_for_97887() {
        let a = joined(&[8, 12, 19, 21], &[22]);
        let (ring, joined_set) = irreducible_cover_trace(&a, e(34)).unwrap();
        assert_eq!(joined_set, MonomialSet::from_ints(&[30]));
        assert_eq!(ring, ns(&[8, 12, 19, 21]).join(&[e(30)]).unwrap());
        let sub = SemigroupAlgebra::new(ring, a.ext().clone()).unwrap();
        assert_eq!(
            sub.pseudo_frobenius_monomials().unwrap(),
            MonomialSet::from_ints(&[34])
        );
        assert!(is_intersection_irreducible_bf(&sub).unwrap());
    }

    #[test]
    fn cover_of_already_irreducible_is_identity() {
        let a = joined(&[4, 6, 9], &[5]);
        let ring = irreducible_cover(&a, e(11)).unwrap();
        assert_eq!(ring, ns(&[4, 6, 9]));
    }

    #[test]
    fn cover_rejects_non_frobenius() {
        let a = joined(&[8, 12, 19, 21], &[22]);
        assert_eq!(
            irreducible_cover(&a, e(22)).unwrap_err(),
            Error::NotFrobenius
        );
    }

    #[test]
    fn decompose_examples() {
        let a = joined(&[5, 7, 9], &[8, 11]);
        let parts = decompose_irreducible(&a).unwrap();
        assert_eq!(parts.len(), 2);
        let mut acc = parts[0].clone();
        for p in &parts[1..] {
            acc = acc.intersect(p);
        }
        assert_eq!(&acc, a.coeff());
        for p in &parts {
            let sub = SemigroupAlgebra::new(p.clone(), a.ext().clone()).unwrap();
            assert!(is_intersection_irreducible_bf(&sub).unwrap());
        }

        let irr = joined(&[4, 6, 9], &[5]);
        assert_eq!(decompose_irreducible(&irr).unwrap(), vec![ns(&[4, 6, 9])]);

        let c = joined(&[8, 12, 19, 21], &[22]);
        let parts = decompose_irreducible(&c).unwrap();
        assert_eq!(parts.len(), 2);
        let inter = parts[0].intersect(&parts[1]);
        assert_eq!(&inter, c.coeff());
        assert!(parts.iter().any(|p| p.contains(e(30))));
        assert!(parts.iter().any(|p| p.contains(e(34))));
    }

    #[test]
    fn gap_limit_enforced() {
        let a = SemigroupAlgebra::new(ns(&[30, 31]), NumericalSemigroup::naturals()).unwrap();
        assert!(matches!(
            enumerate_extensions(&a).unwrap_err(),
            Error::TooManyGaps { .. }
        ));
    }

    #[test]
    fn disjoint_union_of_gaps_along_extensions() {
        let a = joined(&[5, 6, 13], &[7, 8]);
        let lat = enumerate_extensions(&a).unwrap();
        let g_total = a.gap_monomials().unwrap();
        for ext in lat.extensions() {
            let upper = SemigroupAlgebra::new(ext.ring.clone(), a.ext().clone()).unwrap();
            let lower = SemigroupAlgebra::new(a.coeff().clone(), ext.ring.clone()).unwrap();
            let gu = upper.gap_monomials().unwrap();
            let gl = lower.gap_monomials().unwrap();
            assert!(gu.intersection(&gl).is_empty());
            assert_eq!(gu.union(&gl), g_total);
        }
    }
}
