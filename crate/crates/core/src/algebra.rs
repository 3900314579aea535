//! Arithmetic in the cyclic group `Z_M` of odd order.
//!
//! Elements are always stored in the symmetric range `[-(M-1)/2, (M-1)/2]`,
//! so the elements of `Z_25` print as `0, ±1, ..., ±12`. A half-set picks one
//! element out of every pair `{x, -x}` of nonzero elements.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// An odd modulus `M >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(i64);

impl Modulus {
    pub fn new(m: i64) -> Result<Self> {
        if m >= 3 && m % 2 == 1 {
            Ok(Modulus(m))
        } else {
            Err(Error::Modulus(m))
        }
    }

    #[inline]
    pub fn get(self) -> i64 {
        self.0
    }

    /// `(M-1)/2`, the largest canonical value and the size of a half-set.
    #[inline]
    pub fn half(self) -> i64 {
        (self.0 - 1) / 2
    }

    /// Canonical representative of `v` as a plain integer.
    #[inline]
    pub fn reduce(self, v: i64) -> i64 {
        let r = v.rem_euclid(self.0);
        if r > self.half() {
            r - self.0
        } else {
            r
        }
    }

    /// Representative of `v` in `0..M`.
    #[inline]
    pub fn residue(self, v: i64) -> i64 {
        v.rem_euclid(self.0)
    }

    pub fn element(self, v: i64) -> RingElement {
        RingElement { value: self.reduce(v), modulus: self }
    }

    /// Iterates over the nonzero canonical elements `-(M-1)/2..=(M-1)/2`.
    pub fn nonzero(self) -> impl Iterator<Item = i64> {
        let h = self.half();
        (-h..=h).filter(|&x| x != 0)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of `Z_M` in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElement {
    value: i64,
    modulus: Modulus,
}

impl RingElement {
    #[inline]
    pub fn value(self) -> i64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_modulus(self, other: RingElement) -> Result<Modulus> {
        if self.modulus == other.modulus {
            Ok(self.modulus)
        } else {
            Err(Error::MixedModulus(self.modulus.get(), other.modulus.get()))
        }
    }

    pub fn checked_add(self, other: RingElement) -> Result<RingElement> {
        let m = self.same_modulus(other)?;
        Ok(m.element(self.value + other.value))
    }

    pub fn checked_sub(self, other: RingElement) -> Result<RingElement> {
        let m = self.same_modulus(other)?;
        Ok(m.element(self.value - other.value))
    }

    /// Product with an integer scalar.
    pub fn scale(self, k: i64) -> RingElement {
        self.modulus.element(self.value * k)
    }
}

impl std::ops::Neg for RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        self.modulus.element(-self.value)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Reduces `v` modulo `m` into the symmetric range.
///
/// ```
/// use heffter::algebra::canonicalize;
/// assert_eq!(canonicalize(26, 25).unwrap().value(), 1);
/// assert_eq!(canonicalize(13, 25).unwrap().value(), -12);
/// assert!(canonicalize(1, 24).is_err());
/// ```
pub fn canonicalize(v: i64, m: i64) -> Result<RingElement> {
    Ok(Modulus::new(m)?.element(v))
}

/// A set containing exactly one element of every pair `{x, -x}` of nonzero
/// elements of `Z_M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfSet {
    modulus: Modulus,
    elements: BTreeSet<i64>,
}

impl HalfSet {
    pub fn new(modulus: Modulus, values: impl IntoIterator<Item = i64>) -> Result<Self> {
        let elements: BTreeSet<i64> = values.into_iter().map(|v| modulus.reduce(v)).collect();
        if half_set_defect(modulus, &elements).is_some() {
            return Err(Error::Domain(format!("not a half-set of Z_{modulus}")));
        }
        Ok(HalfSet { modulus, elements })
    }

    /// The half-set `{1, ..., (M-1)/2}`.
    pub fn positive(modulus: Modulus) -> Self {
        HalfSet { modulus, elements: (1..=modulus.half()).collect() }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn contains(&self, v: i64) -> bool {
        self.elements.contains(&self.modulus.reduce(v))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.elements.iter().copied()
    }
}

fn half_set_defect(modulus: Modulus, canonical: &BTreeSet<i64>) -> Option<&'static str> {
    if canonical.contains(&0) {
        return Some("contains 0");
    }
    if canonical.iter().any(|&x| canonical.contains(&-x)) {
        return Some("contains a pair {x, -x}");
    }
    if canonical.len() as i64 != modulus.half() {
        return Some("wrong cardinality");
    }
    None
}

/// True iff `values`, after reduction, form a half-set of `Z_m`.
///
/// Duplicates in the input collapse, so `{1, 26}` is the one-element set `{1}`.
/// An invalid modulus yields `false`.
pub fn is_half_set(values: impl IntoIterator<Item = i64>, m: i64) -> bool {
    let Ok(modulus) = Modulus::new(m) else {
        return false;
    };
    let canonical: BTreeSet<i64> = values.into_iter().map(|v| modulus.reduce(v)).collect();
    half_set_defect(modulus, &canonical).is_none()
}

/// The set of absolute values of the inputs.
pub fn support(values: impl IntoIterator<Item = i64>) -> BTreeSet<u64> {
    values.into_iter().map(i64::unsigned_abs).collect()
}
