//! Exact nonnegative rational exponents and finite sorted exponent sets.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::error::{Error, Result};

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// The exponent of a monomial u^s: an exact nonnegative rational kept in
/// lowest terms with denominator at least 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exponent {
    num: u64,
    den: u64,
}

impl Exponent {
    pub const ZERO: Exponent = Exponent { num: 0, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Parse("denominator must be nonzero".into()));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: u64, den: u64) -> Self {
        if num == 0 {
            return Exponent { num: 0, den: 1 };
        }
        let g = gcd(num, den);
        Exponent {
            num: num / g,
            den: den / g,
        }
    }

    pub fn from_int(n: u64) -> Self {
        Exponent { num: n, den: 1 }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// t - self, or None when the difference would be negative.
    pub fn checked_sub(&self, rhs: Exponent) -> Option<Exponent> {
        let l = lcm(self.den, rhs.den);
        let a = self.num as u128 * (l / self.den) as u128;
        let b = rhs.num as u128 * (l / rhs.den) as u128;
        if a < b {
            return None;
        }
        Some(Self::reduced(
            u64::try_from(a - b).expect("exponent overflow"),
            l,
        ))
    }

    /// Multiply by a nonnegative integer.
    pub fn times(&self, k: u64) -> Exponent {
        let prod = self.num as u128 * k as u128;
        Self::reduced(u64::try_from(prod).expect("exponent overflow"), self.den)
    }

    /// Divide exactly by a positive integer (always possible for rationals).
    pub fn div_int(&self, k: u64) -> Exponent {
        assert!(k > 0, "division by zero");
        let den = self.den as u128 * k as u128;
        Self::reduced(self.num, u64::try_from(den).expect("exponent overflow"))
    }

    /// Half of the exponent; total on rationals.
    pub fn half(&self) -> Exponent {
        self.div_int(2)
    }

    /// self / rhs when the quotient is a positive integer, else None.
    pub fn ratio_int(&self, rhs: Exponent) -> Option<u64> {
        if rhs.is_zero() {
            return None;
        }
        // (a/b) / (c/d) = ad / bc
        let num = self.num as u128 * rhs.den as u128;
        let den = self.den as u128 * rhs.num as u128;
        if num == 0 || !num.is_multiple_of(den) {
            return None;
        }
        u64::try_from(num / den).ok()
    }

    /// Floor of self / rhs for nonzero rhs.
    pub fn ratio_floor(&self, rhs: Exponent) -> u64 {
        assert!(!rhs.is_zero(), "division by zero exponent");
        let num = self.num as u128 * rhs.den as u128;
        let den = self.den as u128 * rhs.num as u128;
        u64::try_from(num / den).expect("exponent overflow")
    }

    /// self * scale when the result is an integer, else None.
    pub fn scaled(&self, scale: u64) -> Option<u64> {
        let prod = self.num as u128 * scale as u128;
        if !prod.is_multiple_of(self.den as u128) {
            return None;
        }
        u64::try_from(prod / self.den as u128).ok()
    }
}

impl Add for Exponent {
    type Output = Exponent;

    fn add(self, rhs: Exponent) -> Exponent {
        let l = lcm(self.den, rhs.den);
        let a = self.num as u128 * (l / self.den) as u128;
        let b = rhs.num as u128 * (l / rhs.den) as u128;
        Self::reduced(u64::try_from(a + b).expect("exponent overflow"), l)
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.num as u128 * other.den as u128;
        let b = other.num as u128 * self.den as u128;
        a.cmp(&b)
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Exponent {
    fn from(n: u64) -> Self {
        Exponent::from_int(n)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_part = |p: &str| {
            p.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("invalid number `{p}`")))
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let num = parse_part(n)?;
                let den = parse_part(d)?;
                if den == 0 {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                Ok(Exponent::reduced(num, den))
            }
            None => Ok(Exponent::from_int(parse_part(s)?)),
        }
    }
}

/// A finite, sorted, duplicate-free set of exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MonomialSet {
    exps: Vec<Exponent>,
}

impl MonomialSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vec(mut exps: Vec<Exponent>) -> Self {
        exps.sort();
        exps.dedup();
        MonomialSet { exps }
    }

    pub fn from_ints(ints: &[u64]) -> Self {
        Self::from_vec(ints.iter().map(|&n| Exponent::from_int(n)).collect())
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn contains(&self, e: Exponent) -> bool {
        self.exps.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Exponent> + '_ {
        self.exps.iter().copied()
    }

    pub fn as_slice(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn min(&self) -> Option<Exponent> {
        self.exps.first().copied()
    }

    pub fn max(&self) -> Option<Exponent> {
        self.exps.last().copied()
    }

    pub fn union(&self, other: &MonomialSet) -> MonomialSet {
        let mut v = self.exps.clone();
        v.extend_from_slice(&other.exps);
        Self::from_vec(v)
    }

    pub fn intersection(&self, other: &MonomialSet) -> MonomialSet {
        MonomialSet {
            exps: self
                .exps
                .iter()
                .copied()
                .filter(|e| other.contains(*e))
                .collect(),
        }
    }

    pub fn difference(&self, other: &MonomialSet) -> MonomialSet {
        MonomialSet {
            exps: self
                .exps
                .iter()
                .copied()
                .filter(|e| !other.contains(*e))
                .collect(),
        }
    }
}

impl FromIterator<Exponent> for MonomialSet {
    fn from_iter<I: IntoIterator<Item = Exponent>>(iter: I) -> Self {
        Self::from_vec(iter.into_iter().collect())
    }
}

impl fmt::Debug for MonomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for MonomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(num: u64, den: u64) -> Exponent {
        Exponent::new(num, den).unwrap()
    }

    #[test]
    fn reduction_and_equality() {
        assert_eq!(e(6, 4), e(3, 2));
        assert_eq!(e(0, 7), Exponent::ZERO);
        assert_eq!(e(5, 1).to_string(), "5");
        assert_eq!(e(3, 2).to_string(), "3/2");
    }

    #[test]
    fn parsing() {
        assert_eq!("11".parse::<Exponent>().unwrap(), e(11, 1));
        assert_eq!(" 3/2 ".parse::<Exponent>().unwrap(), e(3, 2));
        assert!("3/0".parse::<Exponent>().is_err());
        assert!("-2".parse::<Exponent>().is_err());
        assert!("a".parse::<Exponent>().is_err());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(e(3, 2) + e(5, 2), e(4, 1));
        assert_eq!(e(7, 1).checked_sub(e(3, 1)), Some(e(4, 1)));
        assert_eq!(e(3, 1).checked_sub(e(7, 2)), None);
        assert_eq!(e(3, 2).times(4), e(6, 1));
        assert_eq!(e(9, 1).half(), e(9, 2));
        assert_eq!(e(12, 1).ratio_int(e(3, 1)), Some(4));
        assert_eq!(e(12, 1).ratio_int(e(5, 1)), None);
        assert_eq!(e(3, 2).scaled(2), Some(3));
        assert_eq!(e(3, 2).scaled(3), None);
    }

    #[test]
    fn set_basics() {
        let s = MonomialSet::from_ints(&[7, 1, 4, 4, 2]);
        assert_eq!(s.len(), 4);
        assert!(s.contains(e(4, 1)));
        assert_eq!(s.min(), Some(e(1, 1)));
        assert_eq!(s.max(), Some(e(7, 1)));
        assert_eq!(format!("{s}"), "{1, 2, 4, 7}");
    }
}
