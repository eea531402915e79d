//! Exact numbers of the form Σ q_n √n over distinct squarefree n.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use rootsys::Q;

/// Element of a multi-quadratic extension of ℚ.
///
/// Terms are sorted by radicand with nonzero coefficients; radicand 1 is
/// the rational part. Equality is coefficient comparison.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Surd {
    terms: Vec<(u64, Q)>,
}

/// Split n = s² f with f squarefree.
fn square_split(mut n: u128) -> (u128, u128) {
    let mut s = 1u128;
    let mut f = 1u128;
    let mut p = 2u128;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            s *= p;
        }
        if e % 2 == 1 {
            f *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (s, f * n)
}

fn primes_of(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Surd {
    pub fn zero() -> Self {
        Surd { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Surd::from_q(Q::one())
    }

    pub fn from_q(q: Q) -> Self {
        if q.is_zero() {
            Surd::zero()
        } else {
            Surd { terms: vec![(1, q)] }
        }
    }

    pub fn from_int(n: i128) -> Self {
        Surd::from_q(Q::from_integer(n))
    }

    /// q·√n for a squarefree-reducible n.
    pub fn term(q: Q, n: u64) -> Self {
        let (s, f) = square_split(n as u128);
        Surd::from_q(q * Q::from_integer(s as i128)).times_sqrt(f as u64)
    }

    /// √q for nonnegative rational q.
    pub fn sqrt(q: Q) -> Self {
        assert!(!q.is_negative(), "square root of a negative rational");
        if q.is_zero() {
            return Surd::zero();
        }
        let (a, b) = (*q.numer() as u128, *q.denom() as u128);
        let (s, f) = square_split(a * b);
        Surd {
            terms: vec![(f as u64, Q::new(s as i128, b as i128))],
        }
    }

    fn times_sqrt(self, f: u64) -> Self {
        if f == 1 {
            return self;
        }
        self * Surd { terms: vec![(f, Q::one())] }
    }

    fn normalize(mut terms: Vec<(u64, Q)>) -> Self {
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(u64, Q)> = Vec::with_capacity(terms.len());
        for (n, c) in terms {
            match out.last_mut() {
                Some((m, d)) if *m == n => *d += c,
                _ => out.push((n, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Surd { terms: out }
    }

    pub fn terms(&self) -> &[(u64, Q)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.iter().all(|t| t.0 == 1)
    }

    pub fn to_rational(&self) -> Option<Q> {
        match self.terms.as_slice() {
            [] => Some(Q::zero()),
            [(1, q)] => Some(*q),
            _ => None,
        }
    }

    pub fn scale(&self, q: Q) -> Self {
        if q.is_zero() {
            return Surd::zero();
        }
        Surd {
            terms: self.terms.iter().map(|(n, c)| (*n, *c * q)).collect(),
        }
    }

    /// Flip the sign of every √n with p | n.
    fn conjugate_at(&self, p: u64) -> Self {
        Surd {
            terms: self
                .terms
                .iter()
                .map(|(n, c)| if n % p == 0 { (*n, -*c) } else { (*n, *c) })
                .collect(),
        }
    }

    /// Multiplicative inverse, by clearing one prime at a time.
    ///
    /// For d = a + b√p with a, b free of √p, d·σ_p(d) = a² − p b² no longer
    /// involves √p.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut primes: Vec<u64> = self.terms.iter().flat_map(|t| primes_of(t.0)).collect();
        primes.sort();
        primes.dedup();
        let mut num = Surd::one();
        let mut den = self.clone();
        for p in primes {
            let c = den.conjugate_at(p);
            num = &num * &c;
            den = &den * &c;
        }
        let d = den.to_rational().expect("denominator not rational after conjugation");
        Some(num.scale(Q::one() / d))
    }

    /// Sign, using the fact that a surd is a real number.
    ///
    /// Decided exactly by repeated squaring over one prime at a time.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        if let Some(q) = self.to_rational() {
            return if q.is_positive() { 1 } else { -1 };
        }
        let p = self.terms.iter().flat_map(|t| primes_of(t.0)).max().unwrap();
        // x = a + b√p with a, b free of √p
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (n, c) in &self.terms {
            if n % p == 0 {
                b.push((n / p, *c));
            } else {
                a.push((*n, *c));
            }
        }
        let a = Surd::normalize(a);
        let b = Surd::normalize(b);
        let (sa, sb) = (a.signum(), b.signum());
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        // opposite signs: compare a² with p b²
        let diff = &(&a * &a) - &(&b * &b).scale(Q::from_integer(p as i128));
        match diff.signum() {
            0 => 0,
            s => s * sa,
        }
    }
}

impl Zero for Surd {
    fn zero() -> Self {
        Surd::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl From<Q> for Surd {
    fn from(q: Q) -> Self {
        Surd::from_q(q)
    }
}

impl<'a> Add<&'a Surd> for &'a Surd {
    type Output = Surd;
    fn add(self, o: &Surd) -> Surd {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < o.terms.len() {
            match (self.terms.get(i), o.terms.get(j)) {
                (Some(a), Some(b)) if a.0 == b.0 => {
                    let c = a.1 + b.1;
                    if !c.is_zero() {
                        out.push((a.0, c));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a.0 < b.0 => {
                    out.push(*a);
                    i += 1;
                }
                (Some(_), Some(b)) => {
                    out.push(*b);
                    j += 1;
                }
                (Some(a), None) => {
                    out.push(*a);
                    i += 1;
                }
                (None, Some(b)) => {
                    out.push(*b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Surd { terms: out }
    }
}

impl<'a> Sub<&'a Surd> for &'a Surd {
    type Output = Surd;
    fn sub(self, o: &Surd) -> Surd {
        self + &(-o)
    }
}

impl<'a> Neg for &'a Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            terms: self.terms.iter().map(|(n, c)| (*n, -*c)).collect(),
        }
    }
}

impl<'a> Mul<&'a Surd> for &'a Surd {
    type Output = Surd;
    fn mul(self, o: &Surd) -> Surd {
        if self.is_zero() || o.is_zero() {
            return Surd::zero();
        }
        let mut terms = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (m, a) in &self.terms {
            for (n, b) in &o.terms {
                // √m √n = g √((m/g)(n/g)) with g = gcd(m, n)
                let g = m.gcd(n);
                terms.push(((m / g) * (n / g), *a * *b * Q::from_integer(g as i128)));
            }
        }
        Surd::normalize(terms)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Surd> for Surd {
            type Output = Surd;
            fn $f(self, o: Surd) -> Surd {
                (&self).$f(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        -&self
    }
}

impl Div<Surd> for Surd {
    type Output = Surd;
    fn div(self, o: Surd) -> Surd {
        &self * &o.inv().expect("division by zero surd")
    }
}

impl AddAssign<&Surd> for Surd {
    fn add_assign(&mut self, o: &Surd) {
        *self = &*self + o;
    }
}

impl SubAssign<&Surd> for Surd {
    fn sub_assign(&mut self, o: &Surd) {
        *self = &*self - o;
    }
}

fn fmt_q(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (n, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *n == 1 {
                write!(f, "{}", fmt_q(&mag))?;
            } else if mag.is_one() {
                write!(f, "sqrt({n})")?;
            } else {
                write!(f, "{}*sqrt({n})", fmt_q(&mag))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed surd literal: {0}")]
pub struct SurdParseError(pub String);

fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let d: i128 = b.trim().parse().ok()?;
            if d == 0 {
                return None;
            }
            Some(Q::new(a.trim().parse().ok()?, d))
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

impl FromStr for Surd {
    type Err = SurdParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || SurdParseError(s.to_string());
        let t = s.trim();
        if t.is_empty() {
            return Err(err());
        }
        // split into signed terms at top-level " + " / " - "
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut neg = false;
        let mut cur = String::new();
        let mut chars = t.chars().peekable();
        if chars.peek() == Some(&'-') {
            neg = true;
            chars.next();
        }
        while let Some(c) = chars.next() {
            if (c == '+' || c == '-') && cur.ends_with(' ') {
                pieces.push((neg, cur.trim().to_string()));
                cur.clear();
                neg = c == '-';
            } else {
                cur.push(c);
            }
        }
        pieces.push((neg, cur.trim().to_string()));
        let mut terms = Vec::new();
        for (neg, p) in pieces {
            let (coef, rad) = if let Some(i) = p.find("sqrt(") {
                let tail = p[i + 5..].strip_suffix(')').ok_or_else(err)?;
                let rad: u64 = tail.trim().parse().map_err(|_| err())?;
                let head = p[..i].trim().trim_end_matches('*').trim();
                let c = if head.is_empty() { Q::one() } else { parse_q(head).ok_or_else(err)? };
                (c, rad)
            } else {
                (parse_q(&p).ok_or_else(err)?, 1)
            };
            let c = if neg { -coef } else { coef };
            let term = Surd::term(c, rad);
            terms.extend(term.terms);
        }
        Ok(Surd::normalize(terms))
    }
}

impl Serialize for Surd {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Surd {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// re + i·im with surd parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ComplexSurd {
    pub re: Surd,
    pub im: Surd,
}

impl ComplexSurd {
    pub fn new(re: Surd, im: Surd) -> Self {
        ComplexSurd { re, im }
    }

    pub fn real(re: Surd) -> Self {
        ComplexSurd { re, im: Surd::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn scale(&self, q: Q) -> Self {
        ComplexSurd { re: self.re.scale(q), im: self.im.scale(q) }
    }
}

impl<'a> Add<&'a ComplexSurd> for &'a ComplexSurd {
    type Output = ComplexSurd;
    fn add(self, o: &ComplexSurd) -> ComplexSurd {
        ComplexSurd { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a ComplexSurd> for &'a ComplexSurd {
    type Output = ComplexSurd;
    fn sub(self, o: &ComplexSurd) -> ComplexSurd {
        ComplexSurd { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a ComplexSurd> for &'a ComplexSurd {
    type Output = ComplexSurd;
    fn mul(self, o: &ComplexSurd) -> ComplexSurd {
        ComplexSurd {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }
}

macro_rules! owned_complex_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<ComplexSurd> for ComplexSurd {
            type Output = ComplexSurd;
            fn $f(self, o: ComplexSurd) -> ComplexSurd {
                (&self).$f(&o)
            }
        }
    )*};
}

owned_complex_ops!(Add add, Sub sub, Mul mul);

impl Neg for ComplexSurd {
    type Output = ComplexSurd;
    fn neg(self) -> ComplexSurd {
        ComplexSurd { re: -self.re, im: -self.im }
    }
}

impl Zero for ComplexSurd {
    fn zero() -> Self {
        ComplexSurd::default()
    }
    fn is_zero(&self) -> bool {
        ComplexSurd::is_zero(self)
    }
}

impl fmt::Display for ComplexSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "i*({})", self.im),
            _ => write!(f, "{} + i*({})", self.re, self.im),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq(a: i128, b: i128) -> Q {
        Q::new(a, b)
    }

    #[test]
    fn sqrt_reduces() {
        assert_eq!(Surd::sqrt(qq(12, 1)).to_string(), "2*sqrt(3)");
        assert_eq!(Surd::sqrt(qq(1, 15)).to_string(), "1/15*sqrt(15)");
        assert_eq!(Surd::sqrt(qq(4, 9)).to_rational(), Some(qq(2, 3)));
    }

    #[test]
    fn product_of_equal_radicands_is_rational() {
        let a = Surd::term(qq(3, 5), 15);
        let b = Surd::term(qq(-2, 7), 15);
        assert_eq!((&a * &b).to_rational(), Some(qq(3, 5) * qq(-2, 7) * qq(15, 1)));
    }

    #[test]
    fn inverse_of_mixed_sum() {
        let x: Surd = "1 + sqrt(2) - 1/3*sqrt(15)".parse().unwrap();
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Surd::one());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["3/5*sqrt(15)", "-1/2 + sqrt(3)", "0", "7", "-sqrt(2) - 2/3*sqrt(6)"] {
            let v: Surd = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert!("sqrt(".parse::<Surd>().is_err());
    }

    #[test]
    fn sign_decision() {
        let a: Surd = "sqrt(2) - 1".parse().unwrap();
        assert_eq!(a.signum(), 1);
        let b: Surd = "sqrt(2) - 3/2".parse().unwrap();
        assert_eq!(b.signum(), -1);
        let c: Surd = "sqrt(3) + sqrt(2) - sqrt(10)".parse().unwrap();
        assert_eq!(c.signum(), -1);
    }
}
