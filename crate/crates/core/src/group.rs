//! Element arithmetic for `T_{4n} x C_m` in the normal form
//! `a^i b^e c^k`, with `0 <= i < 2n`, `e in {0, 1}`, `0 <= k < m`.
//!
//! The multiplication law follows from the defining relations
//! `a^{2n} = e`, `b^2 = a^n`, `b a b^{-1} = a^{-1}`, `c^m = e`, and `c` central:
//! moving `a^j` left across `b` negates its exponent, and `b b` collapses
//! to `a^n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Hypothesis, Result};
use crate::numtheory::{self, checked_mul, gcd};

/// Parameters `(n, m)` of the group `T_{4n} x C_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    n: u64,
    m: u64,
    two_n: u64,
    order: u64,
}

/// A group element in normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    i: u64,
    beta: bool,
    k: u64,
}

impl GroupElement {
    /// Exponent of `a`, in `[0, 2n)`.
    pub fn a_exp(&self) -> u64 {
        self.i
    }

    /// Whether the `b` factor is present.
    pub fn has_b(&self) -> bool {
        self.beta
    }

    /// Exponent of `c`, in `[0, m)`.
    pub fn c_exp(&self) -> u64 {
        self.k
    }

    pub fn is_identity(&self) -> bool {
        self.i == 0 && !self.beta && self.k == 0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::with_capacity(3);
        match self.i {
            0 => {}
            1 => parts.push("a".into()),
            i => parts.push(format!("a^{i}")),
        }
        if self.beta {
            parts.push("b".into());
        }
        match self.k {
            0 => {}
            1 => parts.push("c".into()),
            k => parts.push(format!("c^{k}")),
        }
        if parts.is_empty() {
            f.write_str("e")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

impl GroupSpec {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidSpec { n, m });
        }
        let two_n = checked_mul(2, n)?;
        let order = checked_mul(checked_mul(4, n)?, m)?;
        // Indices are stored as u32 in the lattice bitsets and generator lists.
        if order > u64::from(u32::MAX) {
            return Err(Error::Overflow);
        }
        Ok(GroupSpec { n, m, two_n, order })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn two_n(&self) -> u64 {
        self.two_n
    }

    /// `|T_{4n} x C_m| = 4nm`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// The first hypothesis of the closed-form counts that fails, if any.
    pub fn hypothesis_violation(&self) -> Option<Hypothesis> {
        if self.m.is_multiple_of(2) {
            Some(Hypothesis::OddCyclicFactor)
        } else if !numtheory::is_prime(self.m) {
            Some(Hypothesis::PrimeCyclicFactor)
        } else if self.n.is_multiple_of(self.m) {
            Some(Hypothesis::CoprimeToN)
        } else {
            None
        }
    }

    /// True iff `m` is an odd prime not dividing `n`.
    pub fn closed_form_valid(&self) -> bool {
        self.hypothesis_violation().is_none()
    }

    pub fn require_closed_form(&self) -> Result<()> {
        match self.hypothesis_violation() {
            None => Ok(()),
            Some(violated) => Err(Error::HypothesisViolation {
                n: self.n,
                p: self.m,
                violated,
            }),
        }
    }

    pub fn element(&self, i: u64, beta: bool, k: u64) -> Result<GroupElement> {
        if i >= self.two_n || k >= self.m {
            return Err(Error::OutOfRange { what: "exponent" });
        }
        Ok(GroupElement { i, beta, k })
    }

    /// Builds an element, reducing the exponents into range.
    pub fn word(&self, i: i64, beta: bool, k: i64) -> GroupElement {
        GroupElement {
            i: i.rem_euclid(self.two_n as i64) as u64,
            beta,
            k: k.rem_euclid(self.m as i64) as u64,
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            i: 0,
            beta: false,
            k: 0,
        }
    }

    pub fn a(&self) -> GroupElement {
        self.word(1, false, 0)
    }

    pub fn b(&self) -> GroupElement {
        self.identity().with_b()
    }

    pub fn c(&self) -> GroupElement {
        self.word(0, false, 1)
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.i < self.two_n && g.k < self.m
    }

    fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::MismatchedSpec)
        }
    }

    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.mul(g, h))
    }

    pub(crate) fn mul(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let two_n = self.two_n;
        let k = (g.k + h.k) % self.m;
        match (g.beta, h.beta) {
            (false, _) => GroupElement {
                i: (g.i + h.i) % two_n,
                beta: h.beta,
                k,
            },
            (true, false) => GroupElement {
                i: (g.i + two_n - h.i) % two_n,
                beta: true,
                k,
            },
            (true, true) => GroupElement {
                i: (g.i + two_n - h.i + self.n) % two_n,
                beta: false,
                k,
            },
        }
    }

    pub fn inverse(&self, g: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.inv(g))
    }

    pub(crate) fn inv(&self, g: &GroupElement) -> GroupElement {
        let k = (self.m - g.k) % self.m;
        if g.beta {
            GroupElement {
                i: (g.i + self.n) % self.two_n,
                beta: true,
                k,
            }
        } else {
            GroupElement {
                i: (self.two_n - g.i) % self.two_n,
                beta: false,
                k,
            }
        }
    }

    /// `g^e` by square-and-multiply; negative exponents invert first.
    pub fn power(&self, g: &GroupElement, e: i64) -> Result<GroupElement> {
        self.check(g)?;
        let mut base = if e < 0 { self.inv(g) } else { *g };
        let mut e = e.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Order of `g`, from the closed form:
    /// `lcm(2n / gcd(2n, i), m / gcd(m, k))` without `b`, `lcm(4, m / gcd(m, k))` with it.
    pub fn element_order(&self, g: &GroupElement) -> Result<u64> {
        self.check(g)?;
        Ok(self.order_of(g))
    }

    pub(crate) fn order_of(&self, g: &GroupElement) -> u64 {
        let c_part = self.m / gcd(self.m, g.k);
        let ab_part = if g.beta {
            4
        } else {
            self.two_n / gcd(self.two_n, g.i)
        };
        // both factors divide 4nm, which fits in u64
        ab_part / gcd(ab_part, c_part) * c_part
    }

    /// Position of `g` in `[0, 4nm)`: `(2i + e) m + k`.
    pub fn index_of(&self, g: &GroupElement) -> Result<usize> {
        self.check(g)?;
        Ok(self.idx(g))
    }

    pub(crate) fn idx(&self, g: &GroupElement) -> usize {
        ((g.i * 2 + u64::from(g.beta)) * self.m + g.k) as usize
    }

    pub fn element_at(&self, idx: usize) -> Result<GroupElement> {
        if idx as u64 >= self.order {
            return Err(Error::OutOfRange { what: "index" });
        }
        Ok(self.at(idx))
    }

    pub(crate) fn at(&self, idx: usize) -> GroupElement {
        let idx = idx as u64;
        let k = idx % self.m;
        let rest = idx / self.m;
        GroupElement {
            i: rest / 2,
            beta: rest % 2 == 1,
            k,
        }
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order as usize).map(move |idx| self.at(idx))
    }
}

impl GroupElement {
    fn with_b(mut self) -> Self {
        self.beta = true;
        self
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_{} x C_{}", 4 * self.n, self.m)
    }
}
