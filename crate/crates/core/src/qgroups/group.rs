use std::sync::{Arc, OnceLock};

use super::beta::{solve_beta, Orientation};
use super::cartan::CartanDatum;
use super::lmaps::{solve_lmaps, LMaps};
use super::oq::build_oq_sln;
use super::uq::{build_uq_cop, build_uq_sln};
use super::QgError;
use crate::hopf::{Algebra, FormRef, InverseViaAntipode, SkewPairing};
use crate::repr::UaPairing;

/// Everything attached to SL(n): both quantum groups, the braiding β and
/// its inverse, the evaluation pairing and the maps l±.
pub struct QuantumGroup {
    pub n: usize,
    pub datum: CartanDatum,
    pub a: Arc<Algebra>,
    pub u: Arc<Algebra>,
    pub u_cop: Arc<Algebra>,
    pub beta_table: Arc<SkewPairing>,
    pub beta: FormRef,
    pub beta_inv: FormRef,
    pub pairing: Arc<UaPairing>,
    lmaps: OnceLock<Result<LMaps, QgError>>,
}

static GROUPS: [OnceLock<Result<QuantumGroup, QgError>>; 2] = [OnceLock::new(), OnceLock::new()];

impl QuantumGroup {
    pub fn build(n: usize) -> Result<QuantumGroup, QgError> {
        let datum = CartanDatum::sl(n)?;
        let a = Algebra::single(build_oq_sln(n)?);
        let u = Algebra::single(build_uq_sln(n)?);
        let u_cop = Algebra::single(build_uq_cop(n)?);
        let beta_table = solve_beta(&a, n, Orientation::Upper)?.form;
        let beta: FormRef = beta_table.clone();
        let beta_inv: FormRef = Arc::new(InverseViaAntipode::new(beta.clone()));
        let pairing = Arc::new(UaPairing::new(n, u.clone(), a.clone()));
        Ok(QuantumGroup { n, datum, a, u, u_cop, beta_table, beta, beta_inv, pairing, lmaps: OnceLock::new() })
    }

    /// The shared instance for n = 2 or 3.
    pub fn get(n: usize) -> Result<&'static QuantumGroup, QgError> {
        if !(2..=3).contains(&n) {
            return Err(QgError::Unsupported(n));
        }
        GROUPS[n - 2].get_or_init(|| QuantumGroup::build(n)).as_ref().map_err(|e| e.clone())
    }

    pub fn pairing_form(&self) -> FormRef {
        self.pairing.clone()
    }

    pub fn lmaps(&self) -> Result<&LMaps, QgError> {
        self.lmaps
            .get_or_init(|| solve_lmaps(self.n, &self.a, &self.u_cop, &self.beta, &self.beta_inv, &self.pairing_form()))
            .as_ref()
            .map_err(|e| e.clone())
    }
}
