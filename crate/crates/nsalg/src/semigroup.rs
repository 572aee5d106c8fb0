//! Numerical semigroups: monoids generated by finitely many positive
//! rationals, with exact membership, Frobenius data and Apéry sets.
//!
//! Internally every semigroup is normalized: generators are scaled by the
//! least common denominator to integers, divided by their gcd (the content),
//! and membership of the resulting gcd-1 integer semigroup is answered by an
//! Apéry table indexed by residues modulo the smallest generator.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::exponent::{gcd, lcm, Exponent, MonomialSet};

/// A numerical semigroup: all nonnegative integer combinations of a finite
/// set of positive rational generators.
///
/// Instances are immutable after construction and cheap to clone. Equality
/// compares the canonical form (the minimal generating set as rationals), so
/// two semigroups are equal exactly when they have the same member set.
#[derive(Clone)]
pub struct NumericalSemigroup {
    generators: Vec<Exponent>,
    min_generators: Vec<Exponent>,
    scale: u64,
    content: u64,
    /// Frobenius number of the gcd-1 reduction; -1 when the reduction is all
    /// of the natural numbers.
    frobenius_red: i64,
    /// Apéry set of the gcd-1 reduction modulo its smallest generator:
    /// `apery_red[r]` is the least member congruent to r.
    apery_red: Vec<u64>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by the given positive rationals.
    pub fn from_generators(gens: &[Exponent]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.iter().any(|g| g.is_zero()) {
            return Err(Error::NonPositiveGenerator);
        }
        let mut generators: Vec<Exponent> = gens.to_vec();
        generators.sort();
        generators.dedup();

        let scale = generators.iter().fold(1u64, |l, g| lcm(l, g.denom()));
        let norm: Vec<u64> = generators
            .iter()
            .map(|g| g.scaled(scale).expect("scale is the lcm of denominators"))
            .collect();
        let content = norm.iter().fold(0u64, |g, &n| gcd(g, n));
        let mut reduced: Vec<u64> = norm.iter().map(|&n| n / content).collect();
        reduced.sort_unstable();
        reduced.dedup();

        let apery_red = apery_table(&reduced);
        let m = apery_red.len() as u64;
        let frobenius_red = *apery_red.iter().max().unwrap() as i64 - m as i64;

        let mut s = NumericalSemigroup {
            generators,
            min_generators: Vec::new(),
            scale,
            content,
            frobenius_red,
            apery_red,
        };
        s.min_generators = s.compute_min_generators(&reduced);
        Ok(s)
    }

    /// The semigroup of all nonnegative integers.
    pub fn naturals() -> Self {
        Self::from_generators(&[Exponent::from_int(1)]).unwrap()
    }

    fn compute_min_generators(&self, reduced: &[u64]) -> Vec<Exponent> {
        // A generator is redundant exactly when it is a sum of two nonzero
        // members, i.e. some other generator plus a nonzero member.
        reduced
            .iter()
            .filter(|&&a| {
                !reduced
                    .iter()
                    .any(|&b| b < a && b > 0 && a - b > 0 && self.member_red(a - b))
            })
            .map(|&a| self.exponent_of_reduced(a))
            .collect()
    }

    fn member_red(&self, t: u64) -> bool {
        let m = self.apery_red.len() as u64;
        t >= self.apery_red[(t % m) as usize]
    }

    /// Maps a rational exponent to its coordinate in the gcd-1 reduction,
    /// or None when the exponent cannot lie in the semigroup at all.
    fn reduced_of_exponent(&self, e: Exponent) -> Option<u64> {
        let s = e.scaled(self.scale)?;
        if s % self.content != 0 {
            return None;
        }
        Some(s / self.content)
    }

    fn exponent_of_reduced(&self, t: u64) -> Exponent {
        Exponent::new(t * self.content, self.scale).unwrap()
    }

    /// The generators as supplied by the caller (sorted, deduplicated).
    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    /// The unique minimal generating set; the canonical form printed by
    /// reports and used for equality.
    pub fn minimal_generators(&self) -> &[Exponent] {
        &self.min_generators
    }

    /// The smallest nonzero member.
    pub fn multiplicity(&self) -> Exponent {
        self.min_generators[0]
    }

    /// The grid step: members lie in step * N, with equality past the
    /// conductor.
    pub fn step(&self) -> Exponent {
        Exponent::new(self.content, self.scale).unwrap()
    }

    /// Largest non-member on the step grid, or None for the full grid
    /// (classically the Frobenius number -1).
    pub fn frobenius(&self) -> Option<Exponent> {
        if self.frobenius_red < 0 {
            None
        } else {
            Some(self.exponent_of_reduced(self.frobenius_red as u64))
        }
    }

    /// Smallest exponent c such that every grid point >= c is a member.
    pub fn conductor_exponent(&self) -> Exponent {
        self.exponent_of_reduced((self.frobenius_red + 1) as u64)
    }

    /// Membership test, exact for every nonnegative rational.
    pub fn contains(&self, e: Exponent) -> bool {
        match self.reduced_of_exponent(e) {
            Some(t) => self.member_red(t),
            None => false,
        }
    }

    /// All members up to and including `bound`.
    pub fn members_upto(&self, bound: Exponent) -> Vec<Exponent> {
        let mut out = Vec::new();
        let mut t = 0u64;
        loop {
            let e = self.exponent_of_reduced(t);
            if e > bound {
                break;
            }
            if self.member_red(t) {
                out.push(e);
            }
            t += 1;
        }
        out
    }

    /// Gap monomial exponents of the gcd-1 normalization, scaled back to the
    /// original coordinates: the finitely many grid points missing from the
    /// semigroup.
    pub fn gaps_to_full(&self) -> MonomialSet {
        if self.frobenius_red < 0 {
            return MonomialSet::new();
        }
        (1..=self.frobenius_red as u64)
            .filter(|&t| !self.member_red(t))
            .map(|t| self.exponent_of_reduced(t))
            .collect()
    }

    /// The Apéry set with respect to a nonzero member s: the least member in
    /// each congruence class modulo s, equivalently all members m with
    /// m - s not a member.
    pub fn apery_set(&self, s: Exponent) -> Result<MonomialSet> {
        if s.is_zero() {
            return Err(Error::ZeroExponent);
        }
        if !self.contains(s) {
            return Err(Error::NotAMember);
        }
        let s_red = self.reduced_of_exponent(s).unwrap();
        let mut out = Vec::with_capacity(s_red as usize);
        for r in 0..s_red {
            let mut t = r;
            while !self.member_red(t) {
                t += s_red;
            }
            out.push(self.exponent_of_reduced(t));
        }
        Ok(MonomialSet::from_vec(out))
    }

    /// The semigroup generated by this one together with extra exponents.
    pub fn join(&self, extra: &[Exponent]) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        Self::from_generators(&gens)
    }

    /// The semigroup of common members.
    pub fn intersect(&self, other: &Self) -> Self {
        let d = lcm(self.scale, other.scale);
        // Contents on the common scale; past both conductors membership in the
        // intersection is exactly divisibility by their lcm.
        let ga = self.content * (d / self.scale);
        let gb = other.content * (d / other.scale);
        let l = lcm(ga, gb);
        let ca = self.conductor_exponent().scaled(d).unwrap();
        let cb = other.conductor_exponent().scaled(d).unwrap();
        let c = ca.max(cb);
        let c_aligned = c.div_ceil(l) * l;
        // Members in (0, 2*c_aligned] generate: anything above differs from
        // c_aligned by a multiple of l past both conductors.
        let bound = (2 * c_aligned).max(l);
        let gens: Vec<Exponent> = (1..=bound)
            .filter_map(|k| {
                let e = Exponent::new(k, d).unwrap();
                (self.contains(e) && other.contains(e)).then_some(e)
            })
            .collect();
        Self::from_generators(&gens).expect("intersection always has members")
    }

    /// The ambient grid semigroup step * N of the gcd-1 normalization.
    pub fn full_grid(&self) -> Self {
        Self::from_generators(&[self.step()]).unwrap()
    }
}

/// Apéry set of a gcd-1 integer semigroup modulo its smallest generator,
/// computed as shortest paths on the residue graph.
fn apery_table(reduced: &[u64]) -> Vec<u64> {
    let m = reduced[0] as usize;
    let mut dist = vec![u64::MAX; m];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in reduced {
            let nd = d + g;
            let nr = (nd % m as u64) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    debug_assert!(dist.iter().all(|&d| d < u64::MAX));
    dist
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.min_generators == other.min_generators
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.min_generators.hash(state);
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.min_generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
