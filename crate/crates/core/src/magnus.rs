//! The Magnus group exp(L̂(S′)) stored in log coordinates.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Alphabet, NcPolynomial};
use crate::error::{Error, Result};
use crate::lie::dsw::first_non_lie_degree;
use crate::lie::expmap::{exp_poly, log_poly};
use crate::lie::{bch, LieJson, LieSeries};

#[derive(Clone, Debug, PartialEq)]
pub struct MagnusElement {
    log: LieSeries,
}

impl MagnusElement {
    pub fn identity(alphabet: &Arc<Alphabet>, truncation: usize) -> Self {
        MagnusElement { log: LieSeries::zero(alphabet, truncation) }
    }

    pub fn from_log(log: LieSeries) -> Self {
        MagnusElement { log }
    }

    pub fn log(&self) -> &LieSeries {
        &self.log
    }

    pub fn truncation(&self) -> usize {
        self.log.truncation()
    }

    pub fn is_identity(&self) -> bool {
        self.log.is_zero()
    }

    pub fn mul(&self, o: &MagnusElement) -> Result<MagnusElement> {
        if self.truncation() != o.truncation() {
            return Err(Error::Schema(format!(
                "truncation mismatch {} vs {}",
                self.truncation(),
                o.truncation()
            )));
        }
        Ok(MagnusElement { log: bch(&self.log, &o.log, self.truncation())? })
    }

    pub fn inv(&self) -> MagnusElement {
        MagnusElement { log: self.log.neg() }
    }

    pub fn to_series(&self, n: usize) -> NcPolynomial {
        exp_poly(&self.log.to_polynomial(), n)
    }

    /// Accepts only constant-term-1 series whose logarithm is Lie.
    pub fn from_series(u: &NcPolynomial) -> Result<MagnusElement> {
        let p = log_poly(u, u.truncation())?;
        if let Some(degree) = first_non_lie_degree(&p) {
            return Err(Error::NotLie { degree });
        }
        Ok(MagnusElement { log: LieSeries::from_lie_polynomial(&p)? })
    }

    pub fn to_json(&self) -> MagnusJson {
        MagnusJson { log: self.log.to_json() }
    }

    pub fn from_json(alphabet: &Arc<Alphabet>, j: &MagnusJson) -> Result<Self> {
        Ok(MagnusElement { log: LieSeries::from_json(alphabet, &j.log)? })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MagnusJson {
    pub log: LieJson,
}
