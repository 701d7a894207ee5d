use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::scalars::Scalar;

/// A generator of a tensor product of algebras: `slot` is the tensor factor,
/// `id` the generator index within that factor. Ids double as precedence.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Gen {
    pub slot: u8,
    pub id: u8,
}

impl Gen {
    pub const fn new(slot: u8, id: u8) -> Self {
        Gen { slot, id }
    }

    pub fn with_slot(self, slot: u8) -> Self {
        Gen { slot, id: self.id }
    }
}

pub type Word = SmallVec<[Gen; 8]>;

/// Builds a word from `(slot, id)` pairs.
pub fn word(gens: &[(u8, u8)]) -> Word {
    gens.iter().map(|&(s, i)| Gen::new(s, i)).collect()
}

/// A noncommutative polynomial: words with nonzero scalar coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(c, Word::new())
    }

    pub fn term(c: Scalar, w: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NcPoly { terms }
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(Scalar::one(), std::iter::once(g).collect())
    }

    pub fn from_word(w: Word) -> Self {
        Self::term(Scalar::one(), w)
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(it: I) -> Self {
        let mut p = NcPoly::zero();
        for (w, c) in it {
            p.add_term(w, &c);
        }
        p
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The scalar if `self` is a multiple of the empty word (or zero).
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::new()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NcPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(w.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &Scalar) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// Applies `f` to every generator.
    pub fn map_gens(&self, f: impl Fn(Gen) -> Gen) -> NcPoly {
        NcPoly::from_terms(self.terms.iter().map(|(w, c)| (w.iter().map(|&g| f(g)).collect(), c.clone())))
    }

    /// Renumbers slots: `slot -> map[slot]`.
    pub fn remap_slots(&self, map: &[u8]) -> NcPoly {
        self.map_gens(|g| g.with_slot(map[g.slot as usize]))
    }

    pub fn shift_slots(&self, by: u8) -> NcPoly {
        self.map_gens(|g| g.with_slot(g.slot + by))
    }

    /// Largest word length occurring.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Terms sorted by (length, word), the print order.
    pub fn sorted_terms(&self) -> Vec<(&Word, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        v
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(w, c)| {
                let ws: Vec<String> = w.iter().map(|g| format!("g{}.{}", g.slot, g.id)).collect();
                format!("({})*[{}]", c, ws.join(" "))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<'a> Add<&'a NcPoly> for &'a NcPoly {
    type Output = NcPoly;
    fn add(self, o: &NcPoly) -> NcPoly {
        let mut r = self.clone();
        r.add_scaled(o, &Scalar::one());
        r
    }
}

impl<'a> Sub<&'a NcPoly> for &'a NcPoly {
    type Output = NcPoly;
    fn sub(self, o: &NcPoly) -> NcPoly {
        let mut r = self.clone();
        r.add_scaled(o, &-Scalar::one());
        r
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        self.scale(&-Scalar::one())
    }
}

/// Free product: concatenation, extended bilinearly (no rewriting).
impl<'a> Mul<&'a NcPoly> for &'a NcPoly {
    type Output = NcPoly;
    fn mul(self, o: &NcPoly) -> NcPoly {
        let mut r = NcPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                r.add_term(w, &(c1 * c2));
            }
        }
        r
    }
}
