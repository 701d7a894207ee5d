use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::ScalarParseError;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// A Laurent polynomial `Σ c_k v^k` with rational coefficients.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients,
/// so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentScalar {
    terms: Vec<(i32, Rat)>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        LaurentScalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(rat(1), 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(rat(n), 0)
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · v^k`.
    pub fn monomial(c: Rat, k: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentScalar { terms: vec![(k, c)] }
        }
    }

    /// `v^k`.
    pub fn v_pow(k: i32) -> Self {
        Self::monomial(rat(1), k)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i32, Rat)>>(it: I) -> Self {
        let mut v: Vec<(i32, Rat)> = it.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i32, Rat)> = Vec::with_capacity(v.len());
        for (k, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == k => last.1 += c,
                _ => out.push((k, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        LaurentScalar { terms: out }
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> &[(i32, Rat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Units of `Q[v, v^-1]` are the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn unit_inverse(&self) -> Option<Self> {
        if self.is_unit() {
            let (k, c) = &self.terms[0];
            Some(Self::monomial(c.recip(), -k))
        } else {
            None
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    pub fn coeff(&self, k: i32) -> Rat {
        match self.terms.binary_search_by_key(&k, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rat::zero(),
        }
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.terms.last().map(|t| &t.1)
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentScalar {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.checked_add(k).expect("Laurent exponent overflow"), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentScalar { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `v := r`; `None` when `r = 0` meets a negative exponent.
    pub fn eval(&self, r: &Rat) -> Option<Rat> {
        let mut acc = Rat::zero();
        for (k, c) in &self.terms {
            if r.is_zero() && *k < 0 {
                return None;
            }
            acc += c * pow_rat(r, *k);
        }
        Some(acc)
    }

    /// Substitutes `v := x (mod p)`; `None` when a coefficient denominator or `x` is not invertible.
    pub fn eval_mod(&self, x: u64, p: u64) -> Option<u64> {
        let xinv = if x % p == 0 { None } else { Some(modpow(x, p - 2, p)) };
        let mut acc = 0u64;
        for (k, c) in &self.terms {
            let cm = rat_mod(c, p)?;
            let base = if *k >= 0 { modpow(x, *k as u64, p) } else { modpow(xinv?, (-*k) as u64, p) };
            acc = (acc + mulmod(cm, base, p)) % p;
        }
        Some(acc)
    }

    /// Dense coefficient vector of `self · v^{-min_exp}` (ascending), with the shift.
    pub(crate) fn to_poly(&self) -> (i32, Vec<Rat>) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![Rat::zero(); (hi - lo + 1) as usize];
                for (k, c) in &self.terms {
                    v[(k - lo) as usize] = c.clone();
                }
                (lo, v)
            }
            _ => (0, Vec::new()),
        }
    }

    pub(crate) fn from_poly(shift: i32, coeffs: &[Rat]) -> Self {
        LaurentScalar {
            terms: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (shift + i as i32, c.clone()))
                .collect(),
        }
    }

    /// Size measure used for pivot selection.
    pub fn weight(&self) -> usize {
        let span = match (self.min_exp(), self.max_exp()) {
            (Some(a), Some(b)) => (b - a) as usize,
            _ => 0,
        };
        let bits: usize = self.terms.iter().map(|(_, c)| (c.numer().bits() + c.denom().bits()) as usize).sum();
        span * 8 + self.terms.len() * 4 + bits
    }

    /// Exact division in `Q[v, v^-1]`; `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(inv) = other.unit_inverse() {
            return Some(self * &inv);
        }
        let (sa, a) = self.to_poly();
        let (sb, b) = other.to_poly();
        let (q, r) = poly_divrem(&a, &b);
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_poly(sa - sb, &q))
    }
}

fn pow_rat(r: &Rat, k: i32) -> Rat {
    let mut acc = Rat::one();
    let base = if k >= 0 { r.clone() } else { r.recip() };
    for _ in 0..k.unsigned_abs() {
        acc *= &base;
    }
    acc
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn modpow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn rat_mod(c: &Rat, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let n = c.numer().mod_floor(&pb).to_u64()?;
    let d = c.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    Some(mulmod(n, modpow(d, p - 2, p), p))
}

/// Polynomial division over `Q` on dense ascending coefficient vectors.
pub(crate) fn poly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut q = vec![Rat::zero(); r.len() - db];
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let c = &r[dr] / &lb;
        let s = dr - db;
        for (i, bc) in b.iter().enumerate() {
            let t = &c * bc;
            r[s + i] -= t;
        }
        q[s] = c;
        r = trim(r);
    }
    (q, r)
}

pub(crate) fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Monic gcd over `Q`.
pub(crate) fn poly_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in x.iter_mut() {
            *c /= &l;
        }
    }
    x
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn fmt_rat(c: &Rat) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentScalar {
    /// Canonical text: `c*v^k` terms joined by ` + `, exponents descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, c)| match (*k, c.is_one()) {
                (0, _) => fmt_rat(c),
                (1, true) => "v".to_string(),
                (k, true) => format!("v^{}", k),
                (1, false) => format!("{}*v", fmt_rat(c)),
                (k, false) => format!("{}*v^{}", fmt_rat(c), k),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn parse_rat(s: &str) -> Result<Rat, ScalarParseError> {
    let bad = || ScalarParseError(format!("bad rational `{}`", s));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

fn parse_term(t: &str) -> Result<(i32, Rat), ScalarParseError> {
    let t: String = t.chars().filter(|c| !c.is_whitespace()).collect();
    let t = t.as_str();
    if t.is_empty() {
        return Err(ScalarParseError("empty term".into()));
    }
    let (coef, var) = match t.find('v') {
        None => (t, None),
        Some(pos) => {
            let head = t[..pos].trim();
            let head = head.strip_suffix('*').map(str::trim).unwrap_or(head);
            (head, Some(&t[pos + 1..]))
        }
    };
    let c = match coef {
        "" => rat(1),
        "-" => rat(-1),
        s => parse_rat(s)?,
    };
    let k = match var {
        None => 0,
        Some(rest) => {
            let rest = rest.trim();
            if rest.is_empty() {
                1
            } else {
                let e = rest
                    .strip_prefix('^')
                    .ok_or_else(|| ScalarParseError(format!("bad exponent in `{}`", t)))?;
                e.trim().parse::<i32>().map_err(|_| ScalarParseError(format!("bad exponent in `{}`", t)))?
            }
        }
    };
    Ok((k, c))
}

impl FromStr for LaurentScalar {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ScalarParseError("empty scalar".into()));
        }
        // Split on '+' that is not an exponent sign and not a leading sign.
        let mut terms = Vec::new();
        let mut cur = String::new();
        let mut prev: Option<char> = None;
        for ch in s.chars() {
            if ch == '+' && prev.is_some_and(|p| p != '^') && !cur.trim().is_empty() {
                terms.push(parse_term(&cur)?);
                cur.clear();
            } else if ch == '-' && prev.is_some_and(|p| p.is_ascii_digit() || p == 'v') && !cur.trim().is_empty() {
                // `a - b` written without a plus
                terms.push(parse_term(&cur)?);
                cur.clear();
                cur.push('-');
            } else {
                cur.push(ch);
            }
            if !ch.is_whitespace() {
                prev = Some(ch);
            }
        }
        terms.push(parse_term(&cur)?);
        Ok(LaurentScalar::from_terms(terms))
    }
}

fn add_terms(a: &[(i32, Rat)], b: &[(i32, Rat)], negate_b: bool) -> Vec<(i32, Rat)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

impl<'a> Add<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, o: &LaurentScalar) -> LaurentScalar {
        LaurentScalar { terms: add_terms(&self.terms, &o.terms, false) }
    }
}

impl<'a> Sub<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, o: &LaurentScalar) -> LaurentScalar {
        LaurentScalar { terms: add_terms(&self.terms, &o.terms, true) }
    }
}

impl<'a> Mul<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, o: &LaurentScalar) -> LaurentScalar {
        if self.is_zero() || o.is_zero() {
            return LaurentScalar::zero();
        }
        if self.terms.len() == 1 {
            let (k, c) = &self.terms[0];
            return LaurentScalar { terms: o.terms.iter().map(|(e, x)| (e + k, x * c)).collect() };
        }
        if o.terms.len() == 1 {
            return o * self;
        }
        let lo = self.terms[0].0 + o.terms[0].0;
        let hi = self.terms.last().unwrap().0 + o.terms.last().unwrap().0;
        let mut acc = vec![Rat::zero(); (hi - lo + 1) as usize];
        for (ka, ca) in &self.terms {
            for (kb, cb) in &o.terms {
                acc[(ka + kb - lo) as usize] += ca * cb;
            }
        }
        LaurentScalar::from_poly(lo, &acc)
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, o: LaurentScalar) -> LaurentScalar {
                (&self).$m(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, o: &LaurentScalar) {
        self.terms = add_terms(&self.terms, &o.terms, false);
    }
}

impl SubAssign<&LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, o: &LaurentScalar) {
        self.terms = add_terms(&self.terms, &o.terms, true);
    }
}

impl Zero for LaurentScalar {
    fn zero() -> Self {
        LaurentScalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentScalar {
    fn one() -> Self {
        LaurentScalar::one()
    }
}

/// The symmetric q-integer `[n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d})` with `q = v^D`.
pub fn q_integer(n: i64, d: i32, big_d: i32) -> LaurentScalar {
    let step = d * big_d;
    let m = n.unsigned_abs() as i32;
    let mut acc = LaurentScalar::zero();
    // [m] = Σ_{j=0}^{m-1} q^{d(m-1-2j)}
    for j in 0..m {
        acc += &LaurentScalar::v_pow(step * (m - 1 - 2 * j));
    }
    if n < 0 {
        -acc
    } else {
        acc
    }
}
