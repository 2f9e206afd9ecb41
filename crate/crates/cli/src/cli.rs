use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use mincode::lincode::{condensed_code, cyclic_code, dual, shorten_steps, weight_distribution};
use mincode::minimality::{closed_form_predicate, is_minimal_code_exhaustive, weight_ratio_sufficient};
use mincode::sss::{access_structure, access_structure_trace, deal, reconstruct};
use mincode::{Error, Field, LinearCode, Provenance, Symbol};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value};

use crate::dto::{error_kind, AccessJson, CertificateJson, CodeJson, DealJson, FieldJson};

#[derive(Parser, Debug)]
#[command(name = "mincode", version, about = "Irreducible cyclic codes, minimality certificates and secret sharing on their duals")]
pub struct Cli {
    /// Read the subcommand and its parameters from a JSON file, e.g.
    /// {"command": "access", "q": 2, "m": 6, "N": 3}.
    #[arg(long, global = true)]
    pub request: Option<PathBuf>,
    /// Write the JSON result here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Describe GF(p^(s m)): modulus and primitive element.
    Field(FieldArgs),
    /// Build C(q, m, N).
    CodeBuild(CodeArgs),
    /// Weight distribution of a code.
    CodeWeights(CodeArgs),
    /// Shorten a code on its last steps + 1 coordinates.
    CodeShorten {
        #[command(flatten)]
        code: CodeArgs,
        /// Shortening index i; i + 1 coordinates are removed.
        #[arg(long, default_value_t = 0)]
        steps: usize,
    },
    /// Build the condensed section of C(q, m, N).
    CodeCondense(FieldArgs),
    /// Certify (or fail to certify) that a code is minimal.
    CheckMinimal {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = MinimalMethod::Exhaustive)]
        method: MinimalMethod,
    },
    /// Minimal access structure of the scheme on the dual of a minimal code.
    Access {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = AccessMethod::Enumerate)]
        method: AccessMethod,
    },
    /// Share a secret.
    Deal {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        secret: u32,
        /// Seed for a reproducible deal; fresh entropy otherwise.
        #[arg(long)]
        seed: Option<u64>,
        /// Use the code itself as the scheme code instead of its dual.
        #[arg(long)]
        direct: bool,
    },
    /// Recover a secret from a coalition's shares.
    Reconstruct {
        #[command(flatten)]
        code: CodeArgs,
        /// Participants, e.g. 1,3,6.
        #[arg(long, value_delimiter = ',')]
        coalition: Vec<usize>,
        /// Deal JSON, or a bare {"participant": share} object.
        #[arg(long)]
        shares_file: PathBuf,
        #[arg(long)]
        direct: bool,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct FieldArgs {
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long = "N")]
    pub n_div: Option<u64>,
    /// Little-endian coefficients, constant term first, e.g. 1,0,0,0,0,1,1.
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct CodeArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Code JSON as written by code-build; overrides the field flags.
    #[arg(long)]
    pub code_file: Option<PathBuf>,
    /// Use the condensed section of C(q, m, N).
    #[arg(long)]
    pub condensed: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimalMethod {
    Exhaustive,
    WeightRatio,
    ClosedForm,
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum AccessMethod {
    Enumerate,
    Trace,
}

/// What went wrong, and the exit status it maps to.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Input(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Input(_) | Failure::Domain(_) => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        let (kind, detail) = match self {
            Failure::Usage(d) => ("usage", d.clone()),
            Failure::Input(d) => ("invalid_input", d.clone()),
            Failure::Domain(e) => (error_kind(e), e.to_string()),
        };
        json!({ "error": { "kind": kind, "detail": detail } })
    }
}

type Outcome = Result<Value, Failure>;

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("output types serialize")
}

/// Turns a request object into the argument list it stands for.
pub fn request_args(request: &Value) -> Result<Vec<String>, Failure> {
    let obj = request.as_object().ok_or_else(|| Failure::Usage("request must be a JSON object".into()))?;
    let command = obj
        .get("command")
        .and_then(Value::as_str)
        .ok_or_else(|| Failure::Usage("request needs a \"command\" string".into()))?;
    let mut args = vec!["mincode".to_string(), command.to_string()];
    for (key, value) in obj {
        if key == "command" {
            continue;
        }
        let flag = if key == "N" { "--N".to_string() } else { format!("--{}", key.replace('_', "-")) };
        let text = match value {
            Value::Bool(true) => {
                args.push(flag);
                continue;
            }
            Value::Bool(false) | Value::Null => continue,
            Value::Number(n) => n.to_string(),
            Value::String(s) => s.clone(),
            Value::Array(items) => items
                .iter()
                .map(|v| match v {
                    Value::Number(n) => Ok(n.to_string()),
                    Value::String(s) => Ok(s.clone()),
                    _ => Err(Failure::Usage(format!("unsupported list item in \"{key}\""))),
                })
                .collect::<Result<Vec<_>, _>>()?
                .join(","),
            Value::Object(_) => return Err(Failure::Usage(format!("unsupported value for \"{key}\""))),
        };
        args.push(flag);
        args.push(text);
    }
    Ok(args)
}

impl FieldArgs {
    fn field(&self) -> Result<Field, Failure> {
        let m = self.m.ok_or_else(|| Failure::Usage("--m is required".into()))?;
        let modulus = self.modulus.as_deref();
        match (self.p, self.q) {
            (Some(_), Some(_)) => Err(Failure::Usage("give either --p (with --s) or --q, not both".into())),
            (Some(p), None) => Ok(Field::new(p, self.s.unwrap_or(1), m, modulus)?),
            (None, Some(q)) => {
                if self.s.is_some() {
                    return Err(Failure::Usage("--s only goes with --p".into()));
                }
                Ok(Field::extension(q, m, modulus)?)
            }
            (None, None) => Err(Failure::Usage("--p or --q is required".into())),
        }
    }

    fn n_div(&self) -> Result<u64, Failure> {
        self.n_div.ok_or_else(|| Failure::Usage("--N is required".into()))
    }

    fn q(&self) -> Result<u64, Failure> {
        match (self.p, self.q) {
            (_, Some(q)) => Ok(q),
            (Some(p), None) => {
                let s = self.s.unwrap_or(1);
                p.checked_pow(s).ok_or(Failure::Domain(Error::FieldTooLarge(u64::MAX)))
            }
            (None, None) => Err(Failure::Usage("--p or --q is required".into())),
        }
    }
}

impl CodeArgs {
    fn code(&self) -> Result<LinearCode, Failure> {
        if let Some(path) = &self.code_file {
            let dto: CodeJson = read_json(path)?;
            return Ok(dto.to_code()?);
        }
        let field = self.field.field()?;
        let n_div = self.field.n_div()?;
        if self.condensed {
            Ok(condensed_code(&field, n_div)?)
        } else {
            Ok(cyclic_code(&field, n_div)?)
        }
    }

    /// (q, m, N) when the code is C(q, m, N) itself.
    fn cyclic_parameters(&self, code: &LinearCode) -> Option<(u64, u32, u64)> {
        match code.provenance() {
            Provenance::Cyclic { q, m, n_div } => Some((*q, *m, *n_div)),
            _ => None,
        }
    }
}

fn scheme(code: LinearCode, direct: bool) -> LinearCode {
    if direct {
        code
    } else {
        dual(&code)
    }
}

pub fn run(command: &Command) -> Outcome {
    match command {
        Command::Field(args) => Ok(to_value(&FieldJson::from_field(&args.field()?))),
        Command::CodeBuild(args) => Ok(to_value(&CodeJson::from_code(&args.code()?))),
        Command::CodeWeights(args) => {
            let wd = weight_distribution(&args.code()?)?;
            Ok(to_value(&crate::dto::weights_json(&wd)))
        }
        Command::CodeShorten { code, steps } => {
            Ok(to_value(&CodeJson::from_code(&shorten_steps(&code.code()?, *steps)?)))
        }
        Command::CodeCondense(args) => {
            Ok(to_value(&CodeJson::from_code(&condensed_code(&args.field()?, args.n_div()?)?)))
        }
        Command::CheckMinimal { code: args, method } => check_minimal(args, *method),
        Command::Access { code: args, method } => {
            let access = match method {
                AccessMethod::Enumerate => access_structure(&args.code()?)?,
                AccessMethod::Trace => {
                    if args.code_file.is_some() || args.condensed {
                        return Err(Failure::Usage("--method trace works from --q/--p, --m and --N only".into()));
                    }
                    let field = args.field.field()?;
                    let n_div = args.field.n_div()?;
                    let code = cyclic_code(&field, n_div)?;
                    if !is_minimal_code_exhaustive(&code)?.is_minimal() {
                        return Err(Error::NotCertifiedMinimal.into());
                    }
                    access_structure_trace(&field, n_div)?
                }
            };
            Ok(to_value(&AccessJson::from(&access)))
        }
        Command::Deal { code, secret, seed, direct } => {
            let scheme = scheme(code.code()?, *direct);
            let secret = scheme.fq().check(*secret)?;
            let mut rng = match seed {
                Some(s) => StdRng::seed_from_u64(*s),
                None => StdRng::from_entropy(),
            };
            let dealt = deal(&scheme, secret, &mut rng)?;
            Ok(to_value(&DealJson::from(&dealt)))
        }
        Command::Reconstruct { code, coalition, shares_file, direct } => {
            let scheme = scheme(code.code()?, *direct);
            let shares = read_shares(shares_file)?;
            let secret = reconstruct(&scheme, coalition, &shares)?;
            Ok(json!({ "secret": secret, "coalition": coalition }))
        }
    }
}

fn read_shares(path: &Path) -> Result<BTreeMap<usize, Symbol>, Failure> {
    let value: Value = read_json(path)?;
    let map = value.get("shares").unwrap_or(&value);
    serde_json::from_value(map.clone()).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn check_minimal(args: &CodeArgs, method: MinimalMethod) -> Outcome {
    let closed = || -> Outcome {
        let (q, m, n_div) = if args.code_file.is_some() || args.condensed {
            return Err(Failure::Usage("--method closed-form needs C(q, m, N) given by --q/--p, --m and --N".into()));
        } else {
            (args.field.q()?, args.field.m.ok_or_else(|| Failure::Usage("--m is required".into()))?, args.field.n_div()?)
        };
        Ok(to_value(&CertificateJson::from(&closed_form_predicate(q, m, n_div)?)))
    };
    match method {
        MinimalMethod::ClosedForm => closed(),
        MinimalMethod::Exhaustive => Ok(to_value(&CertificateJson::from(&is_minimal_code_exhaustive(&args.code()?)?))),
        MinimalMethod::WeightRatio => Ok(to_value(&CertificateJson::from(&weight_ratio_sufficient(&args.code()?)?))),
        MinimalMethod::All => {
            let code = args.code()?;
            let closed_form = match args.cyclic_parameters(&code) {
                Some((q, m, n_div)) if args.code_file.is_none() => {
                    match closed_form_predicate(q, m, n_div) {
                        Ok(c) => to_value(&CertificateJson::from(&c)),
                        Err(e) => Failure::Domain(e).to_json(),
                    }
                }
                _ => Value::Null,
            };
            Ok(json!({
                "exhaustive": to_value(&CertificateJson::from(&is_minimal_code_exhaustive(&code)?)),
                "weight_ratio": to_value(&CertificateJson::from(&weight_ratio_sufficient(&code)?)),
                "closed_form": closed_form,
            }))
        }
    }
}
