//! L-function descriptors: functional-equation data (gamma factors, scale Q,
//! root number, pole order) plus the coefficient source, with the two derived
//! invariants everything downstream consumes — degree and conductor.

use std::f64::consts::PI;
use std::fmt;
use std::path::{Path, PathBuf};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// One gamma factor Gamma(lambda * s + mu) of the completed function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaFactor {
    pub lambda: f64,
    pub mu: Complex64,
}

impl GammaFactor {
    pub fn new(lambda: f64, mu: Complex64) -> Result<Self> {
        if !(lambda > 0.0) {
            return Err(Error::InvalidDescriptor(format!(
                "gamma factor lambda must be positive, got {lambda}"
            )));
        }
        if mu.re < 0.0 {
            return Err(Error::InvalidDescriptor(format!(
                "gamma factor mu must have Re >= 0, got {mu}"
            )));
        }
        Ok(Self { lambda, mu })
    }
}

/// Integer Weierstrass coefficients a1, a2, a3, a4, a6.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeierstrassCurve {
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
    pub a4: i64,
    pub a6: i64,
}

impl WeierstrassCurve {
    /// b-invariants of the model, as i128 to keep intermediate products exact.
    pub fn b_invariants(&self) -> (i128, i128, i128, i128) {
        let (a1, a2, a3, a4, a6) = (
            self.a1 as i128,
            self.a2 as i128,
            self.a3 as i128,
            self.a4 as i128,
            self.a6 as i128,
        );
        let b2 = a1 * a1 + 4 * a2;
        let b4 = 2 * a4 + a1 * a3;
        let b6 = a3 * a3 + 4 * a6;
        let b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        (b2, b4, b6, b8)
    }

    pub fn discriminant(&self) -> i128 {
        let (b2, b4, b6, b8) = self.b_invariants();
        -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    }
}

/// Where the Dirichlet coefficients come from.
#[derive(Debug, Clone, PartialEq)]
pub enum CoefficientSource {
    RiemannZeta,
    RamanujanDelta,
    EllipticCurve {
        curve: WeierstrassCurve,
        conductor: u64,
    },
    /// Normalized prime coefficients from a cache file on disk; degree and
    /// conductor cannot be inferred from the data, so the config carries them.
    ExternalTable {
        path: PathBuf,
    },
}

impl fmt::Display for CoefficientSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::RiemannZeta => write!(f, "riemann_zeta"),
            Self::RamanujanDelta => write!(f, "ramanujan_delta"),
            Self::EllipticCurve { conductor, .. } => write!(f, "elliptic_curve(N={conductor})"),
            Self::ExternalTable { path } => write!(f, "external_table({})", path.display()),
        }
    }
}

/// Descriptor for one primitive L-function in analytic normalization
/// (coefficients centered on the critical line at 1/2).
#[derive(Debug, Clone, PartialEq)]
pub struct LFunctionDescriptor {
    pub name: String,
    /// The scale Q in the completed function Q^s * prod Gamma(lambda s + mu) * F(s).
    pub q_scale: f64,
    pub gamma_factors: Vec<GammaFactor>,
    pub root_number: Complex64,
    pub pole_order: u32,
    pub source: CoefficientSource,
}

impl LFunctionDescriptor {
    /// Degree d = 2 * sum(lambda_j).
    pub fn degree(&self) -> f64 {
        2.0 * self.gamma_factors.iter().map(|g| g.lambda).sum::<f64>()
    }

    /// Conductor q = (2 pi)^d * Q^2 * prod lambda_j^(2 lambda_j).
    pub fn conductor(&self) -> f64 {
        let d = self.degree();
        let lam_prod: f64 = self
            .gamma_factors
            .iter()
            .map(|g| g.lambda.powf(2.0 * g.lambda))
            .product();
        (2.0 * PI).powf(d) * self.q_scale * self.q_scale * lam_prod
    }

    fn validate(self) -> Result<Self> {
        if (self.root_number.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidDescriptor(format!(
                "|root number| must be 1, got {}",
                self.root_number.norm()
            )));
        }
        if self.gamma_factors.is_empty() {
            return Err(Error::InvalidDescriptor("no gamma factors".into()));
        }
        Ok(self)
    }

    /// The Riemann zeta function: Q = pi^{-1/2}, one factor Gamma(s/2), pole at 1.
    pub fn zeta() -> Self {
        Self {
            name: "zeta".into(),
            q_scale: 1.0 / PI.sqrt(),
            gamma_factors: vec![GammaFactor {
                lambda: 0.5,
                mu: Complex64::new(0.0, 0.0),
            }],
            root_number: Complex64::new(1.0, 0.0),
            pole_order: 1,
            source: CoefficientSource::RiemannZeta,
        }
    }

    /// The weight-12 level-1 cusp form L-function: Q = 1/(2 pi), Gamma(s + 11/2).
    pub fn ramanujan_delta() -> Self {
        Self {
            name: "delta".into(),
            q_scale: 1.0 / (2.0 * PI),
            gamma_factors: vec![GammaFactor {
                lambda: 1.0,
                mu: Complex64::new(5.5, 0.0),
            }],
            root_number: Complex64::new(1.0, 0.0),
            pole_order: 0,
            source: CoefficientSource::RamanujanDelta,
        }
    }

    /// An elliptic curve over Q of conductor N, analytic normalization:
    /// Q = sqrt(N)/(2 pi), Gamma(s + 1/2). The model must be nonsingular and
    /// should be globally minimal so that bad-prime point counts give the
    /// standard local data.
    pub fn elliptic_curve(name: &str, curve: WeierstrassCurve, conductor: u64) -> Result<Self> {
        if curve.discriminant() == 0 {
            return Err(Error::SingularCurve);
        }
        if conductor == 0 {
            return Err(Error::InvalidDescriptor(
                "conductor must be positive".into(),
            ));
        }
        Self {
            name: name.into(),
            q_scale: (conductor as f64).sqrt() / (2.0 * PI),
            gamma_factors: vec![GammaFactor {
                lambda: 1.0,
                mu: Complex64::new(0.5, 0.0),
            }],
            root_number: Complex64::new(1.0, 0.0),
            pole_order: 0,
            source: CoefficientSource::EllipticCurve { curve, conductor },
        }
        .validate()
    }

    /// The conductor-37 curve y^2 + y = x^3 - x, the degree-2 companion used
    /// alongside the Delta L-function in the worked examples.
    pub fn curve_37a() -> Self {
        Self::elliptic_curve(
            "ec37",
            WeierstrassCurve {
                a1: 0,
                a2: 0,
                a3: 1,
                a4: -1,
                a6: 0,
            },
            37,
        )
        .expect("37a is nonsingular")
    }

    /// A descriptor backed by a coefficient cache file. `degree` and
    /// `conductor` are declared, and gamma data is synthesized to reproduce
    /// them (one factor lambda = degree/2, Q solved from the conductor).
    pub fn external(
        name: &str,
        path: PathBuf,
        degree: f64,
        conductor: f64,
        pole_order: u32,
    ) -> Result<Self> {
        if !(degree > 0.0) || !(conductor > 0.0) {
            return Err(Error::InvalidDescriptor(
                "external table needs positive degree and conductor".into(),
            ));
        }
        let lambda = degree / 2.0;
        let q2 = conductor / ((2.0 * PI).powf(degree) * lambda.powf(2.0 * lambda));
        Self {
            name: name.into(),
            q_scale: q2.sqrt(),
            gamma_factors: vec![GammaFactor {
                lambda,
                mu: Complex64::new(0.5, 0.0),
            }],
            root_number: Complex64::new(1.0, 0.0),
            pole_order,
            source: CoefficientSource::ExternalTable { path },
        }
        .validate()
    }

    /// Builtin lookup by name: `zeta`, `delta`, `ec37`.
    pub fn builtin(kind: &str) -> Result<Self> {
        match kind {
            "zeta" | "riemann_zeta" => Ok(Self::zeta()),
            "delta" | "ramanujan_delta" => Ok(Self::ramanujan_delta()),
            "ec37" | "curve37" => Ok(Self::curve_37a()),
            other => Err(Error::InvalidDescriptor(format!(
                "unknown builtin '{other}' (expected zeta | delta | ec37, or a config file path)"
            ))),
        }
    }

    /// Parse a key-value config file. Format, one `key = value` per line,
    /// `#` comments:
    ///
    /// ```text
    /// name = my_curve
    /// kind = elliptic_curve        # riemann_zeta | ramanujan_delta | elliptic_curve | external_table
    /// a1 = 0
    /// a2 = 0
    /// a3 = 1
    /// a4 = -1
    /// a6 = 0
    /// conductor = 37
    /// # external_table additionally takes: table = <path>, degree = <d>, pole_order = <m>
    /// ```
    pub fn from_config_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_config_str(&text, path)
    }

    pub fn from_config_str(text: &str, path: &Path) -> Result<Self> {
        let mut kv = std::collections::HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| Error::Config {
                path: path.into(),
                line: i + 1,
                msg: format!("expected 'key = value', got '{raw}'"),
            })?;
            kv.insert(k.trim().to_string(), (v.trim().to_string(), i + 1));
        }
        let lookup = |key: &str| -> Result<String> {
            kv.get(key)
                .map(|(v, _)| v.clone())
                .ok_or_else(|| Error::Config {
                    path: path.into(),
                    line: 0,
                    msg: format!("missing required key '{key}'"),
                })
        };
        let parse_i64 = |key: &str| -> Result<i64> {
            let (v, line) = kv
                .get(key)
                .ok_or_else(|| Error::Config {
                    path: path.into(),
                    line: 0,
                    msg: format!("missing required key '{key}'"),
                })?
                .clone();
            v.parse().map_err(|_| Error::Config {
                path: path.into(),
                line,
                msg: format!("'{key}' must be an integer, got '{v}'"),
            })
        };

        let kind = lookup("kind")?;
        let name = kv
            .get("name")
            .map(|(v, _)| v.clone())
            .unwrap_or_else(|| kind.clone());
        match kind.as_str() {
            "riemann_zeta" => Ok({
                let mut d = Self::zeta();
                d.name = name;
                d
            }),
            "ramanujan_delta" => Ok({
                let mut d = Self::ramanujan_delta();
                d.name = name;
                d
            }),
            "elliptic_curve" => {
                let curve = WeierstrassCurve {
                    a1: parse_i64("a1")?,
                    a2: parse_i64("a2")?,
                    a3: parse_i64("a3")?,
                    a4: parse_i64("a4")?,
                    a6: parse_i64("a6")?,
                };
                let n = parse_i64("conductor")?;
                if n <= 0 {
                    return Err(Error::Config {
                        path: path.into(),
                        line: 0,
                        msg: "conductor must be a positive integer".into(),
                    });
                }
                Self::elliptic_curve(&name, curve, n as u64)
            }
            "external_table" => {
                let table = lookup("table")?;
                let degree: f64 = lookup("degree")?.parse().map_err(|_| Error::Config {
                    path: path.into(),
                    line: 0,
                    msg: "degree must be a number".into(),
                })?;
                let conductor: f64 = lookup("conductor")?.parse().map_err(|_| Error::Config {
                    path: path.into(),
                    line: 0,
                    msg: "conductor must be a number".into(),
                })?;
                let pole_order: u32 = kv
                    .get("pole_order")
                    .map(|(v, line)| {
                        v.parse().map_err(|_| Error::Config {
                            path: path.into(),
                            line: *line,
                            msg: "pole_order must be a nonnegative integer".into(),
                        })
                    })
                    .transpose()?
                    .unwrap_or(0);
                Self::external(&name, PathBuf::from(table), degree, conductor, pole_order)
            }
            other => Err(Error::Config {
                path: path.into(),
                line: 0,
                msg: format!("unknown kind '{other}'"),
            }),
        }
    }

    /// Resolve a CLI descriptor argument: builtin name or config-file path.
    pub fn resolve(arg: &str) -> Result<Self> {
        match Self::builtin(arg) {
            Ok(d) => Ok(d),
            Err(_) if Path::new(arg).exists() => Self::from_config_file(Path::new(arg)),
            Err(e) => Err(e),
        }
    }
}
