//! JSON shapes read and written by the CLI.

use std::collections::BTreeMap;

use mincode::minimality::Witness;
use mincode::{AccessStructure, Certificate, Error, Field, Fq, LinearCode, Method, Provenance, ShareDeal, Verdict};
use mincode::matrix::Matrix;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FieldJson {
    pub p: u64,
    pub s: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primitive: Option<Vec<u32>>,
}

impl FieldJson {
    pub fn from_field(f: &Field) -> FieldJson {
        FieldJson {
            p: f.p() as u64,
            s: f.s(),
            m: f.m(),
            modulus: f.modulus().to_vec(),
            primitive: Some(f.coeffs(f.primitive())),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ProvenanceJson {
    Cyclic {
        q: u64,
        m: u32,
        #[serde(rename = "N")]
        n_div: u64,
    },
    Condensed {
        q: u64,
        m: u32,
        #[serde(rename = "N")]
        n_div: u64,
        l: usize,
        t: usize,
        e: u8,
    },
    Shortened {
        parent: Box<ProvenanceJson>,
        steps: usize,
    },
    Dual {
        of: Box<ProvenanceJson>,
    },
    Explicit,
}

impl From<&Provenance> for ProvenanceJson {
    fn from(p: &Provenance) -> ProvenanceJson {
        match p {
            Provenance::Cyclic { q, m, n_div } => ProvenanceJson::Cyclic { q: *q, m: *m, n_div: *n_div },
            Provenance::Condensed { q, m, n_div, l, t, e } => {
                ProvenanceJson::Condensed { q: *q, m: *m, n_div: *n_div, l: *l, t: *t, e: *e }
            }
            Provenance::Shortened { parent, steps } => {
                ProvenanceJson::Shortened { parent: Box::new(parent.as_ref().into()), steps: *steps }
            }
            Provenance::Dual { of } => ProvenanceJson::Dual { of: Box::new(of.as_ref().into()) },
            Provenance::Explicit => ProvenanceJson::Explicit,
        }
    }
}

impl From<&ProvenanceJson> for Provenance {
    fn from(p: &ProvenanceJson) -> Provenance {
        match p {
            ProvenanceJson::Cyclic { q, m, n_div } => Provenance::Cyclic { q: *q, m: *m, n_div: *n_div },
            ProvenanceJson::Condensed { q, m, n_div, l, t, e } => {
                Provenance::Condensed { q: *q, m: *m, n_div: *n_div, l: *l, t: *t, e: *e }
            }
            ProvenanceJson::Shortened { parent, steps } => {
                Provenance::Shortened { parent: Box::new(parent.as_ref().into()), steps: *steps }
            }
            ProvenanceJson::Dual { of } => Provenance::Dual { of: Box::new(of.as_ref().into()) },
            ProvenanceJson::Explicit => Provenance::Explicit,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CodeJson {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub gen: Vec<Vec<u32>>,
    #[serde(default = "explicit")]
    pub provenance: ProvenanceJson,
    /// Minimal polynomial of the GF(q) generator, for q = p^s with s > 1.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subfield: Option<Vec<u32>>,
}

fn explicit() -> ProvenanceJson {
    ProvenanceJson::Explicit
}

impl CodeJson {
    pub fn from_code(code: &LinearCode) -> CodeJson {
        let gen = code.generator().row_vecs().into_iter().map(|r| r.into_iter().map(u32::from).collect()).collect();
        CodeJson {
            q: code.q() as u64,
            n: code.n(),
            k: code.k(),
            gen,
            provenance: code.provenance().into(),
            subfield: code.fq().subfield_modulus().map(|m| m.to_vec()),
        }
    }

    pub fn to_code(&self) -> Result<LinearCode, Error> {
        let fq = match &self.subfield {
            Some(modulus) => {
                let d = Fq::new(self.q)?;
                Fq::with_subfield_modulus(d.p() as u64, d.s(), modulus)?
            }
            None => Fq::new(self.q)?,
        };
        let mut rows = Vec::with_capacity(self.gen.len());
        for r in &self.gen {
            if r.len() != self.n {
                return Err(Error::LengthMismatch { expected: self.n, got: r.len() });
            }
            rows.push(r.iter().map(|&x| fq.check(x)).collect::<Result<Vec<_>, _>>()?);
        }
        let matrix = if rows.is_empty() { Matrix::zeros(0, self.n) } else { Matrix::from_rows(&rows, self.n)? };
        LinearCode::from_generator(fq, matrix, (&self.provenance).into())
    }
}

/// Weight -> count, nonzero weights only.
pub fn weights_json(wd: &mincode::WeightDistribution) -> BTreeMap<usize, u64> {
    wd.counts().iter().filter(|(&w, _)| w > 0).map(|(&w, &c)| (w, c)).collect()
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct WitnessJson {
    pub covering: Vec<u8>,
    pub covered: Vec<u8>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CertificateJson {
    pub verdict: &'static str,
    pub method: &'static str,
    pub theorem: Option<&'static str>,
    pub ratio: Option<(usize, usize)>,
    pub witness: Option<WitnessJson>,
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> CertificateJson {
        let verdict = match c.verdict {
            Verdict::Minimal => "minimal",
            Verdict::NotMinimal => "not_minimal",
            Verdict::Unknown => "unknown",
        };
        let (method, theorem) = match c.method {
            Method::Exhaustive => ("exhaustive", None),
            Method::WeightRatio => ("weight_ratio", None),
            Method::ClosedForm(t) => ("closed_form", t.map(|t| t.id())),
            Method::OneWeight => ("one_weight", None),
        };
        let witness = c.witness.as_ref().map(|Witness { covering, covered }| WitnessJson {
            covering: covering.symbols().to_vec(),
            covered: covered.symbols().to_vec(),
        });
        CertificateJson { verdict, method, theorem, ratio: c.ratio, witness }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct AccessJson {
    pub sets: Vec<Vec<usize>>,
    pub dictators: Vec<usize>,
    pub frequency: BTreeMap<usize, u64>,
    pub count: usize,
}

impl From<&AccessStructure> for AccessJson {
    fn from(a: &AccessStructure) -> AccessJson {
        AccessJson { sets: a.sets.clone(), dictators: a.dictators.clone(), frequency: a.frequency.clone(), count: a.count() }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct DealJson {
    pub secret: u8,
    pub shares: BTreeMap<usize, u8>,
}

impl From<&ShareDeal> for DealJson {
    fn from(d: &ShareDeal) -> DealJson {
        DealJson { secret: d.secret, shares: d.share_map() }
    }
}

/// Snake-case tag for every library error.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NotPrime(_) => "not_prime",
        Error::NotPrimePower(_) => "not_prime_power",
        Error::InvalidField(_) => "invalid_field",
        Error::FieldTooLarge(_) => "field_too_large",
        Error::BadModulus { .. } => "bad_modulus",
        Error::UnreducedCoefficient(_) => "unreduced_coefficient",
        Error::ReducibleModulus => "reducible_modulus",
        Error::NoPrimitiveRootFound => "no_primitive_root_found",
        Error::NotPrimitive => "not_primitive",
        Error::NotInSubfield => "not_in_subfield",
        Error::InvalidDivisor(_) => "invalid_divisor",
        Error::DoesNotDivide { .. } => "does_not_divide",
        Error::AlphabetTooLarge(_) => "alphabet_too_large",
        Error::SymbolOutOfRange { .. } => "symbol_out_of_range",
        Error::RaggedMatrix => "ragged_matrix",
        Error::LengthMismatch { .. } => "length_mismatch",
        Error::ColumnsProportional(..) => "columns_proportional",
        Error::ZeroLastColumn => "zero_last_column",
        Error::ZeroColumn(_) => "zero_column",
        Error::DimensionExhausted(_) => "dimension_exhausted",
        Error::DualDistanceTooSmall => "dual_distance_too_small",
        Error::TooLarge(_) => "too_large",
        Error::NotInCode => "not_in_code",
        Error::EmptyCode => "empty_code",
        Error::ZeroWord => "zero_word",
        Error::UnsupportedN(_) => "unsupported_n",
        Error::UnsupportedS(_) => "unsupported_s",
        Error::NotCertifiedMinimal => "not_certified_minimal",
        Error::NoParticipants(_) => "no_participants",
        Error::UnknownParticipant(_) => "unknown_participant",
        Error::MissingShare(_) => "missing_share",
        Error::NotAuthorized(_) => "not_authorized",
        Error::ZeroSecretColumn => "zero_secret_column",
    }
}
