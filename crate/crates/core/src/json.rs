//! JSON wire formats. Rationals travel as `"p/q"` strings, Gaussian rationals
//! as `{"re", "im"}`, monomials as 1-based `{"dz", "dzbar"}` index lists.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bilinear::SymBilinearForm;
use crate::error::{Error, Result};
use crate::exterior::{mask_indices, Form, HermitianMatrix, Monomial, MAX_DIM};
use crate::positivity::{Cone, ConeVerdict};
use crate::rational::{format_rational, parse_rational, GaussianRational, Rational};
use crate::symfunc::{Partition, WeightVector};

/// `#[serde(with = "rational_str")]` for a single rational.
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub mod rational_opt {
    use super::*;

    pub fn serialize<S: Serializer>(
        r: &Option<Rational>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        r.as_ref().map(format_rational).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| parse_rational(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

pub mod rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        v.iter().map(format_rational).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct GaussianDto {
    re: String,
    im: String,
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GaussianDto {
            re: format_rational(&self.re),
            im: format_rational(&self.im),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = GaussianDto::deserialize(d)?;
        let re = parse_rational(&dto.re).map_err(serde::de::Error::custom)?;
        let im = parse_rational(&dto.im).map_err(serde::de::Error::custom)?;
        Ok(GaussianRational::new(re, im))
    }
}

#[derive(Serialize, Deserialize)]
struct TermDto {
    dz: Vec<usize>,
    dzbar: Vec<usize>,
    coeff: GaussianRational,
}

#[derive(Serialize, Deserialize)]
struct FormDto {
    dim: usize,
    terms: Vec<TermDto>,
}

fn indices_to_mask(idx: &[usize], d: usize) -> Result<u16> {
    let mut mask = 0u16;
    let mut last = 0;
    for &k in idx {
        if k == 0 || k > d {
            return Err(Error::IndexOutOfRange { index: k, dim: d });
        }
        if k <= last {
            return Err(Error::Parse(format!("indices must be strictly ascending: {idx:?}")));
        }
        last = k;
        mask |= 1 << (k - 1);
    }
    Ok(mask)
}

impl TryFrom<FormDto> for Form {
    type Error = Error;

    fn try_from(dto: FormDto) -> Result<Form> {
        if dto.dim == 0 || dto.dim > MAX_DIM {
            return Err(Error::UnsupportedDimension(dto.dim));
        }
        let mut out = Form::zero(dto.dim)?;
        for t in dto.terms {
            let m = Monomial::new(
                indices_to_mask(&t.dz, dto.dim)?,
                indices_to_mask(&t.dzbar, dto.dim)?,
            );
            out.add_term(m, t.coeff);
        }
        Ok(out)
    }
}

impl From<&Form> for FormDto {
    fn from(f: &Form) -> Self {
        FormDto {
            dim: f.dim(),
            terms: f
                .terms()
                .map(|(m, c)| TermDto {
                    dz: mask_indices(m.holo),
                    dzbar: mask_indices(m.anti),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }
}

impl Serialize for Form {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FormDto::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Form {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Form::try_from(FormDto::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct HermitianDto {
    entries: Vec<Vec<GaussianRational>>,
}

impl Serialize for HermitianMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HermitianDto {
            entries: self.entries().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HermitianMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = HermitianDto::deserialize(d)?;
        HermitianMatrix::new(dto.entries).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct SymDto {
    basis: String,
    #[serde(with = "matrix_str")]
    matrix: Vec<Vec<Rational>>,
}

mod matrix_str {
    use super::*;

    pub fn serialize<S: Serializer>(
        m: &[Vec<Rational>],
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        m.iter()
            .map(|row| row.iter().map(format_rational).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Vec<Rational>>, D::Error> {
        Vec::<Vec<String>>::deserialize(d)?
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

impl Serialize for SymBilinearForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymDto {
            basis: self.tag().to_string(),
            matrix: self.matrix().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymBilinearForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = SymDto::deserialize(d)?;
        SymBilinearForm::new(dto.basis, dto.matrix).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Partition::new(Vec::<u32>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational_vec::serialize(self.weights(), s)
    }
}

impl<'de> Deserialize<'de> for WeightVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        WeightVector::new(rational_vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct ConeDto {
    cone: Cone,
    witness: Option<Form>,
}

impl Serialize for ConeVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ConeDto {
            cone: self.cone,
            witness: self.witness.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ConeVerdict {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = ConeDto::deserialize(d)?;
        Ok(ConeVerdict {
            cone: dto.cone,
            witness: dto.witness,
        })
    }
}
