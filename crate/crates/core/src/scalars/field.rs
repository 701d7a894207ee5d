use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::laurent::{poly_divrem, poly_gcd, LaurentScalar, Rat};
use super::ScalarParseError;

/// An element `num / den` of the fraction field `Q(v)`.
///
/// Normal form: `den` is a monic polynomial in `v` with nonzero constant
/// term and `gcd(num, den) = 1`, so equality is structural. Laurent
/// scalars embed with `den = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FieldScalar {
    num: LaurentScalar,
    den: LaurentScalar,
}

impl FieldScalar {
    pub fn zero() -> Self {
        FieldScalar { num: LaurentScalar::zero(), den: LaurentScalar::one() }
    }

    pub fn one() -> Self {
        FieldScalar { num: LaurentScalar::one(), den: LaurentScalar::one() }
    }

    pub fn from_int(n: i64) -> Self {
        LaurentScalar::from_int(n).into()
    }

    pub fn v_pow(k: i32) -> Self {
        LaurentScalar::v_pow(k).into()
    }

    pub fn new(num: LaurentScalar, den: LaurentScalar) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(inv) = den.unit_inverse() {
            return FieldScalar { num: &num * &inv, den: LaurentScalar::one() };
        }
        // Shift so the denominator is a polynomial with nonzero constant term, then make it monic.
        let s = den.min_exp().unwrap();
        let den = den.shift(-s);
        let num = num.shift(-s);
        let lc = den.leading_coeff().unwrap().clone();
        let inv_lc = lc.recip();
        let den = den.scale(&inv_lc);
        let num = num.scale(&inv_lc);
        let (tn, pn) = num.to_poly();
        let (_, pd) = den.to_poly();
        let g = poly_gcd(&pn, &pd);
        if g.len() <= 1 {
            return FieldScalar { num, den };
        }
        let (qn, _) = poly_divrem(&pn, &g);
        let (qd, _) = poly_divrem(&pd, &g);
        FieldScalar { num: LaurentScalar::from_poly(tn, &qn), den: LaurentScalar::from_poly(0, &qd) }
    }

    pub fn numer(&self) -> &LaurentScalar {
        &self.num
    }

    pub fn denom(&self) -> &LaurentScalar {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentScalar> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Units of the Laurent ring, i.e. scalars `c·v^k`.
    pub fn is_laurent_unit(&self) -> bool {
        self.den.is_one() && self.num.is_unit()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(FieldScalar::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 { self.inv().expect("inverse of zero") } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FieldScalar { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn eval(&self, r: &Rat) -> Option<Rat> {
        let d = self.den.eval(r)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(r)? / d)
    }

    pub fn eval_mod(&self, x: u64, p: u64) -> Option<u64> {
        let d = self.den.eval_mod(x, p)?;
        if d == 0 {
            return None;
        }
        let n = self.num.eval_mod(x, p)?;
        Some(super::laurent::mulmod(n, super::laurent::modpow(d, p - 2, p), p))
    }

    /// Size measure used for pivot selection.
    pub fn weight(&self) -> usize {
        self.num.weight() + self.den.weight()
    }
}

impl From<LaurentScalar> for FieldScalar {
    fn from(l: LaurentScalar) -> Self {
        FieldScalar { num: l, den: LaurentScalar::one() }
    }
}

impl From<&LaurentScalar> for FieldScalar {
    fn from(l: &LaurentScalar) -> Self {
        l.clone().into()
    }
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

fn strip_parens(s: &str) -> Option<&str> {
    let s = s.trim();
    let inner = s.strip_prefix('(')?.strip_suffix(')')?;
    // Only strip when the parentheses enclose the whole string.
    let mut depth = 0i32;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    let _ = i;
                    return None;
                }
            }
            _ => {}
        }
    }
    Some(inner)
}

impl FromStr for FieldScalar {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(inner) = strip_parens(s) {
            return inner.parse();
        }
        // Top-level `/` between parenthesised groups.
        let mut depth = 0i32;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 && s[..i].trim_end().ends_with(')') => {
                    let n: LaurentScalar = strip_parens(&s[..i])
                        .ok_or_else(|| ScalarParseError(format!("bad numerator in `{}`", s)))?
                        .parse()?;
                    let d: LaurentScalar = strip_parens(&s[i + 1..])
                        .unwrap_or(&s[i + 1..])
                        .parse()?;
                    if d.is_zero() {
                        return Err(ScalarParseError("zero denominator".into()));
                    }
                    return Ok(FieldScalar::new(n, d));
                }
                _ => {}
            }
        }
        Ok(s.parse::<LaurentScalar>()?.into())
    }
}

impl<'a> Add<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn add(self, o: &FieldScalar) -> FieldScalar {
        if self.den.is_one() && o.den.is_one() {
            return FieldScalar { num: &self.num + &o.num, den: LaurentScalar::one() };
        }
        if self.den == o.den {
            return FieldScalar::new(&self.num + &o.num, self.den.clone());
        }
        FieldScalar::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl<'a> Sub<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn sub(self, o: &FieldScalar) -> FieldScalar {
        if self.den.is_one() && o.den.is_one() {
            return FieldScalar { num: &self.num - &o.num, den: LaurentScalar::one() };
        }
        if self.den == o.den {
            return FieldScalar::new(&self.num - &o.num, self.den.clone());
        }
        FieldScalar::new(&(&self.num * &o.den) - &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl<'a> Mul<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn mul(self, o: &FieldScalar) -> FieldScalar {
        if self.num.is_zero() || o.num.is_zero() {
            return FieldScalar::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return FieldScalar { num: &self.num * &o.num, den: LaurentScalar::one() };
        }
        FieldScalar::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl<'a> Div<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn div(self, o: &FieldScalar) -> FieldScalar {
        self * &o.inv().expect("division by zero scalar")
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, o: FieldScalar) -> FieldScalar {
                (&self).$m(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&FieldScalar> for FieldScalar {
    fn add_assign(&mut self, o: &FieldScalar) {
        *self = &*self + o;
    }
}

impl SubAssign<&FieldScalar> for FieldScalar {
    fn sub_assign(&mut self, o: &FieldScalar) {
        *self = &*self - o;
    }
}

impl Zero for FieldScalar {
    fn zero() -> Self {
        FieldScalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for FieldScalar {
    fn one() -> Self {
        FieldScalar::one()
    }
}
