//! Exact multivariate Laurent polynomials over the fixed variable set
//! `(A, R, a, z, t, r)`.
//!
//! The bracket lives in `A, R`; the rigid HOMFLYPT polynomial lives in
//! `a, z, t, r`. Both share one ring so values can be compared, rendered and
//! serialized uniformly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// One of the six indeterminates.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A,
    R,
    a,
    z,
    t,
    r,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::A, Var::R, Var::a, Var::z, Var::t, Var::r];

    /// Order used when printing a monomial and when breaking ties between
    /// terms: rigidity variables first.
    const PRINT_ORDER: [Var; 6] = [Var::t, Var::r, Var::R, Var::A, Var::a, Var::z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::A => "A",
            Var::R => "R",
            Var::a => "a",
            Var::z => "z",
            Var::t => "t",
            Var::r => "r",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }

    fn is_rigid(self) -> bool {
        matches!(self, Var::R | Var::t | Var::r)
    }
}

/// Exponent vector in the fixed order `(A, R, a, z, t, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponents(pub [i32; 6]);

impl Exponents {
    pub const ZERO: Exponents = Exponents([0; 6]);

    pub fn of(v: Var, e: i32) -> Self {
        let mut x = [0; 6];
        x[v.index()] = e;
        Exponents(x)
    }

    pub fn get(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn set(&mut self, v: Var, e: i32) {
        self.0[v.index()] = e;
    }

    pub fn with(mut self, v: Var, e: i32) -> Self {
        self.set(v, e);
        self
    }

    fn plus(&self, other: &Exponents) -> Exponents {
        let mut out = [0; 6];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i] + other.0[i];
        }
        Exponents(out)
    }

    fn scaled(&self, k: i32) -> Exponents {
        Exponents(self.0.map(|e| e * k))
    }

    /// Rendering key: rigid degree first, then exponents in print order.
    /// Terms are rendered in descending key order.
    fn render_key(&self) -> (i64, [i32; 6]) {
        let rigid: i64 = Var::ALL
            .iter()
            .filter(|v| v.is_rigid())
            .map(|v| self.get(*v) as i64)
            .sum();
        (rigid, Var::PRINT_ORDER.map(|v| self.get(v)))
    }
}

/// A Laurent polynomial with arbitrary-precision integer coefficients.
///
/// The zero polynomial is the empty map; no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_term(BigInt::from(c), Exponents::ZERO)
    }

    pub fn from_term(coeff: impl Into<BigInt>, exps: Exponents) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        LaurentPoly { terms }
    }

    /// `v^e` as a polynomial.
    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::from_term(1, Exponents::of(v, e))
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    /// The loop value `δ = -A² - A⁻²`.
    pub fn delta() -> Self {
        -(Self::var_pow(Var::A, 2) + Self::var_pow(Var::A, -2))
    }

    /// The unlink factor `(a - a⁻¹)·z⁻¹`.
    pub fn unlink_factor() -> Self {
        (Self::var(Var::a) - Self::var_pow(Var::a, -1)) * Self::var_pow(Var::z, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Exponents) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Returns the single term `(coeff, exps)` if the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(&BigInt, &Exponents)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, e))
        } else {
            None
        }
    }

    /// True if this is `±m` for a monomial `m`, i.e. a unit of the ring.
    pub fn is_unit(&self) -> bool {
        matches!(self.as_monomial(), Some((c, _)) if c.abs().is_one())
    }

    /// Integer power. Negative exponents are only defined for units.
    pub fn pow(&self, n: i32) -> Result<Self> {
        if n >= 0 {
            let mut acc = Self::one();
            let mut base = self.clone();
            let mut k = n as u32;
            while k > 0 {
                if k & 1 == 1 {
                    acc = &acc * &base;
                }
                k >>= 1;
                if k > 0 {
                    base = &base * &base;
                }
            }
            return Ok(acc);
        }
        match self.as_monomial() {
            Some((c, e)) if c.abs().is_one() => {
                let sign = if n % 2 != 0 { c.clone() } else { BigInt::one() };
                Ok(Self::from_term(sign, e.scaled(n)))
            }
            _ => Err(Error::NegativeExponentSubstitution),
        }
    }

    /// Maximum over terms of the summed exponents of `vars`; `None` for zero.
    pub fn total_degree_in(&self, vars: &[Var]) -> Option<i64> {
        self.terms
            .keys()
            .map(|e| vars.iter().map(|v| e.get(*v) as i64).sum())
            .max()
    }

    /// Replaces every occurrence of `var` by `value`.
    pub fn substitute(&self, var: Var, value: &LaurentPoly) -> Result<Self> {
        let mut out = Self::zero();
        let mut powers: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (exps, c) in &self.terms {
            let e = exps.get(var);
            let pw = match powers.entry(e) {
                std::collections::btree_map::Entry::Occupied(o) => o.into_mut(),
                std::collections::btree_map::Entry::Vacant(v) => v.insert(value.pow(e)?),
            };
            let rest = Self::from_term(c.clone(), exps.with(var, 0));
            out += &rest * &*pw;
        }
        Ok(out)
    }

    /// True if no term mentions `v`.
    pub fn is_free_of(&self, v: Var) -> bool {
        self.terms.keys().all(|e| e.get(v) == 0)
    }

    fn sorted_terms(&self) -> Vec<(&Exponents, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|x| std::cmp::Reverse(x.0.render_key()));
        v
    }

    /// JSON form: array of `{"coeff": "<int>", "exp": {"A": 0, ...}}` in
    /// rendering order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(e, c)| {
                    let mut exp = serde_json::Map::new();
                    for v in Var::ALL {
                        exp.insert(v.name().to_string(), json!(e.get(v)));
                    }
                    json!({ "coeff": c.to_string(), "exp": exp })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Syntax("malformed polynomial JSON".into());
        let mut out = Self::zero();
        for term in v.as_array().ok_or_else(bad)? {
            let coeff: BigInt = term
                .get("coeff")
                .and_then(Value::as_str)
                .and_then(|s| s.parse().ok())
                .ok_or_else(bad)?;
            let mut exps = Exponents::ZERO;
            for (k, e) in term.get("exp").and_then(Value::as_object).ok_or_else(bad)? {
                let var = Var::from_name(k).ok_or_else(bad)?;
                let e = e.as_i64().ok_or_else(bad)?;
                exps.set(var, i32::try_from(e).map_err(|_| bad())?);
            }
            out.add_term(exps, coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let factors: Vec<String> = Var::PRINT_ORDER
                .iter()
                .filter(|v| exps.get(**v) != 0)
                .map(|v| match exps.get(*v) {
                    1 => v.name().to_string(),
                    e => format!("{}^{}", v.name(), e),
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self + (-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.plus(e2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(x: Var) -> LaurentPoly {
        LaurentPoly::var(x)
    }

    fn vp(x: Var, e: i32) -> LaurentPoly {
        LaurentPoly::var_pow(x, e)
    }

    #[test]
    fn from_term_cases() {
        assert!(LaurentPoly::from_term(0, Exponents::of(Var::t, 4)).is_zero());
        assert_eq!(LaurentPoly::from_term(1, Exponents::ZERO), LaurentPoly::one());
        let p = LaurentPoly::from_term(-1, Exponents::of(Var::A, 3));
        assert_eq!(p.to_string(), "-A^3");
    }

    #[test]
    fn add_cases() {
        let p = &(&v(Var::a) + &v(Var::z)) + &(-v(Var::a));
        assert_eq!(p, v(Var::z));
        assert_eq!(&p + &LaurentPoly::zero(), p);
        let two_r = &v(Var::r) + &v(Var::r);
        assert_eq!(two_r, LaurentPoly::from_term(2, Exponents::of(Var::r, 1)));
        assert_eq!(two_r.to_string(), "2*r");
    }

    #[test]
    fn mul_cases() {
        let p = &(&v(Var::a) - &vp(Var::a, -1)) * &(&v(Var::a) + &vp(Var::a, -1));
        assert_eq!(p, &vp(Var::a, 2) - &vp(Var::a, -2));
        assert_eq!(&p * &LaurentPoly::one(), p);
        let tz = &v(Var::t) * &vp(Var::z, -1);
        let q = &tz * &(&v(Var::a) - &vp(Var::a, -1));
        let expected = LaurentPoly::from_term(1, Exponents::of(Var::t, 1).with(Var::a, 1).with(Var::z, -1))
            + LaurentPoly::from_term(-1, Exponents::of(Var::t, 1).with(Var::a, -1).with(Var::z, -1));
        assert_eq!(q, expected);
        assert_eq!(q, &v(Var::t) * &LaurentPoly::unlink_factor());
    }

    #[test]
    fn degree_cases() {
        let tr = [Var::t, Var::r];
        assert_eq!((&v(Var::t) * &vp(Var::r, -1)).total_degree_in(&tr), Some(0));
        assert_eq!((&vp(Var::t, 2) * &v(Var::r)).total_degree_in(&tr), Some(3));
        assert_eq!((&vp(Var::a, 3) * &vp(Var::z, -2)).total_degree_in(&tr), Some(0));
        assert_eq!(LaurentPoly::zero().total_degree_in(&tr), None);
    }

    #[test]
    fn substitute_cases() {
        let one = LaurentPoly::one();
        assert_eq!(v(Var::R).substitute(Var::R, &one).unwrap(), one);
        let p = -(&vp(Var::A, 3) * &vp(Var::R, 2));
        assert_eq!(p.substitute(Var::R, &one).unwrap(), -vp(Var::A, 3));
        let q = &(&v(Var::t) * &(&v(Var::a) * &vp(Var::z, -1))) + &v(Var::r);
        assert_eq!(q.substitute(Var::t, &LaurentPoly::zero()).unwrap(), v(Var::r));
        let neg = vp(Var::t, -1);
        assert!(matches!(
            neg.substitute(Var::t, &(&v(Var::a) + &one)),
            Err(Error::NegativeExponentSubstitution)
        ));
        assert_eq!(neg.substitute(Var::t, &(-v(Var::a))).unwrap(), -vp(Var::a, -1));
    }

    #[test]
    fn rendering_matches_documented_example() {
        let p = &(&v(Var::t) * &LaurentPoly::unlink_factor()) + &v(Var::r);
        assert_eq!(p.to_string(), "t*a*z^-1 - t*a^-1*z^-1 + r");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::delta().to_string(), "-A^2 - A^-2");
    }

    #[test]
    fn json_round_trip() {
        let p = &(&v(Var::t) * &LaurentPoly::unlink_factor()) + &v(Var::r);
        let j = p.to_json();
        assert_eq!(j[0]["coeff"], "1");
        assert_eq!(j[0]["exp"]["t"], 1);
        assert_eq!(LaurentPoly::from_json(&j).unwrap(), p);
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let p = &LaurentPoly::constant(i64::MAX) + &v(Var::A);
        let q = p.pow(4).unwrap();
        let expected: BigInt = BigInt::from(i64::MAX).pow(4);
        assert_eq!(q.coeff(&Exponents::ZERO), expected);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-3i64..=3, prop::array::uniform6(-2i32..=2)), 0..=5).prop_map(|ts| {
            ts.into_iter()
                .map(|(c, e)| LaurentPoly::from_term(c, Exponents(e)))
                .sum()
        })
    }

    fn canonical(p: &LaurentPoly) -> bool {
        p.terms().all(|(_, c)| !c.is_zero())
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), s in arb_poly()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p + &q) + &s, &p + &(&q + &s));
            prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
            prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
            prop_assert!(canonical(&(&p + &q)));
            prop_assert!(canonical(&(&p * &q)));
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn degree_of_product(p in arb_poly(), q in arb_poly()) {
            let vars = [Var::t, Var::r];
            let prod = &p * &q;
            if let (Some(dp), Some(dq)) = (p.total_degree_in(&vars), q.total_degree_in(&vars)) {
                if let Some(d) = prod.total_degree_in(&vars) {
                    prop_assert!(d <= dp + dq);
                }
                if p.len() == 1 && q.len() == 1 {
                    prop_assert_eq!(prod.total_degree_in(&vars), Some(dp + dq));
                }
            }
        }
    }
}
