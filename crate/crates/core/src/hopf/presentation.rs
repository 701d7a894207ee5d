use crate::freealg::{CentralReduction, Gen, NcPoly, Rule, TermOrder, Word};
use crate::scalars::Scalar;

/// A defining relation `lhs = rhs` over a single factor (slot 0).
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub lhs: NcPoly,
    pub rhs: NcPoly,
}

impl Relation {
    pub fn new(lhs: NcPoly, rhs: NcPoly) -> Self {
        Relation { lhs, rhs }
    }

    pub fn difference(&self) -> NcPoly {
        &self.lhs - &self.rhs
    }
}

/// A Hopf algebra given by generators, oriented rules and structure tables.
///
/// Everything is expressed over slot 0; coproduct images use slots 0 and 1.
/// With `cop` set, the coproduct is read with its tensor factors swapped and
/// `antipode` holds the inverse of the original antipode.
#[derive(Clone, Debug)]
pub struct HopfPresentation {
    pub name: String,
    pub names: Vec<String>,
    pub order: TermOrder,
    pub relations: Vec<Relation>,
    pub rules: Vec<Rule>,
    pub reduction: Option<CentralReduction>,
    pub coproduct: Vec<NcPoly>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<NcPoly>,
    pub cop: bool,
}

impl HopfPresentation {
    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn gens(&self) -> Vec<Gen> {
        (0..self.names.len()).map(|i| Gen::new(0, i as u8)).collect()
    }

    pub fn gen(&self, name: &str) -> Option<Gen> {
        self.names.iter().position(|n| n == name).map(|i| Gen::new(0, i as u8))
    }

    /// The coproduct of generator `id` (slots 0 and 1), honouring `cop`.
    pub fn coproduct_of(&self, id: u8) -> NcPoly {
        let d = &self.coproduct[id as usize];
        if self.cop {
            d.remap_slots(&[1, 0])
        } else {
            d.clone()
        }
    }

    /// The co-opposite Hopf algebra. `antipode_inverse` must be S^{-1} on generators.
    pub fn cop(&self, antipode_inverse: Vec<NcPoly>) -> HopfPresentation {
        let mut out = self.clone();
        out.name = format!("{}^cop", self.name);
        out.cop = !self.cop;
        out.antipode = antipode_inverse;
        out
    }

    pub fn with_antipode(mut self, antipode: Vec<NcPoly>) -> Self {
        self.antipode = antipode;
        self
    }

    pub fn word(&self, names: &[&str]) -> Word {
        names.iter().map(|n| self.gen(n).unwrap_or_else(|| panic!("no generator {}", n))).collect()
    }
}
