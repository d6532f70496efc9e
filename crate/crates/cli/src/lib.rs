//! The `symf` command line. [`run`] parses arguments, dispatches to
//! `symf-core`, and returns the process exit status: 0 on success, 1 when
//! the library rejects the input, 2 when the arguments do not parse.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use symf_core::coeffs::{self, ClassFunction, Limits};
use symf_core::hopf;
use symf_core::linalg::RatMatrix;
use symf_core::partition::{partitions_of, Permutation};
use symf_core::reps::{self, ClassicalKind, MatrixRep, SubgroupSpec};
use symf_core::sym::{self, transition};
use symf_core::tableau::{self, SkewShape, Tableau};
use symf_core::{BasisTag, BigInt, BigRational, Partition, SymElement};

#[derive(Parser)]
#[command(name = "symf", version, about = "Exact symmetric functions and representations of the symmetric group")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, env = "SYMF_FORMAT", default_value = "text")]
    format: Format,
    /// Highest degree of the basis-transition cache
    #[arg(long, global = true, env = "SYMF_MAX_DEGREE")]
    max_degree: Option<usize>,
    /// Largest n for Specht modules
    #[arg(long, global = true, env = "SYMF_MODULE_CAP")]
    module_cap: Option<usize>,
    /// Largest n for the regular representation and Young modules
    #[arg(long, global = true, env = "SYMF_REGULAR_CAP")]
    regular_cap: Option<usize>,
    /// Largest n for full character tables
    #[arg(long, global = true, env = "SYMF_TABLE_CAP")]
    table_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn basis_arg(s: &str) -> Result<BasisTag, String> {
    s.parse().map_err(err)
}

#[derive(Subcommand)]
enum Command {
    /// Kostka number K(λ, μ): semistandard tableaux of shape λ and content μ
    Kostka {
        shape: String,
        content: String,
        /// Also list the tableaux
        #[arg(long)]
        list: bool,
    },
    /// Number of standard tableaux of shape λ
    Flambda { shape: String },
    /// Partitions of n in canonical order
    Partitions { n: usize },
    /// Conjugate partition
    Conjugate { partition: String },
    /// Whether λ dominates μ
    Dominates { lambda: String, mu: String },
    /// z_λ and conjugacy class sizes for every λ ⊢ n
    Ztable { n: usize },
    /// RSK of a word (entries separated by spaces or commas); with
    /// --inverse, takes P and Q written as rows like 1,1,2/2,3
    Rsk {
        #[arg(required = true)]
        input: Vec<String>,
        /// Recover the word from P and Q
        #[arg(long)]
        inverse: bool,
    },
    /// Re-expand a symmetric function, e.g. `convert s:2,1 --to m`
    Convert {
        element: String,
        #[arg(long, value_parser = basis_arg)]
        to: BasisTag,
    },
    /// Product f·g
    Multiply {
        f: String,
        g: String,
        #[arg(long, value_parser = basis_arg)]
        to: Option<BasisTag>,
    },
    /// Hall inner product ⟨f, g⟩
    Inner { f: String, g: String },
    /// The involution ω
    Omega {
        f: String,
        #[arg(long, value_parser = basis_arg)]
        to: Option<BasisTag>,
    },
    /// Skew Schur function s_{λ/μ}
    Skew {
        outer: String,
        inner: String,
        #[arg(long, value_parser = basis_arg, default_value = "s")]
        to: BasisTag,
    },
    /// s_μ^⊥ f
    Perp {
        mu: String,
        f: String,
        #[arg(long, value_parser = basis_arg)]
        to: Option<BasisTag>,
    },
    /// f(x_1, …, x_m)
    Evaluate { f: String, m: usize },
    /// Character value χ^λ(μ)
    Char { lambda: String, mu: String },
    /// Character table of S_n
    Chartable { n: usize },
    /// Frobenius characteristic of a class function on S_n, values listed
    /// in canonical class order
    Ch {
        n: usize,
        /// Comma-separated values, e.g. "3,1,0" for n = 3
        #[arg(allow_hyphen_values = true)]
        values: String,
        #[arg(long, value_parser = basis_arg, default_value = "s")]
        to: BasisTag,
    },
    /// Class function with the given Frobenius characteristic
    ChInverse {
        f: String,
        /// Degree, when f is zero
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Littlewood–Richardson coefficient c^λ_{μν}
    Lr { lambda: String, mu: String, nu: String },
    /// Kronecker coefficient γ^λ_{μν}
    Kronecker { lambda: String, mu: String, nu: String },
    /// Kronecker product f ⋆ g
    KronProduct {
        f: String,
        g: String,
        #[arg(long, value_parser = basis_arg)]
        to: Option<BasisTag>,
    },
    /// Multiplicities of S^λ in the Young module H^μ
    YoungsRule { mu: String },
    /// Δf = f[X+Y]
    Coproduct {
        f: String,
        #[arg(long, value_parser = basis_arg)]
        to: Option<BasisTag>,
    },
    /// Δ*f = f[XY]
    CoproductStar {
        f: String,
        #[arg(long, value_parser = basis_arg)]
        to: Option<BasisTag>,
    },
    /// The antipode
    Antipode {
        f: String,
        #[arg(long, value_parser = basis_arg)]
        to: Option<BasisTag>,
    },
    /// h_n[XY] in a pair of dual bases
    Cauchy {
        n: usize,
        #[arg(value_parser = basis_arg, default_value = "s")]
        left: BasisTag,
        #[arg(value_parser = basis_arg, default_value = "s")]
        right: BasisTag,
    },
    /// Plethysm f[g], or f[c·g] with --copies c
    Plethysm {
        f: String,
        g: String,
        #[arg(long, default_value_t = 1)]
        copies: u32,
        #[arg(long, value_parser = basis_arg)]
        to: Option<BasisTag>,
    },
    /// Matrices and character of a representation: trivial:N, sign:N,
    /// defining:N, regular:N, standard:N, young:λ or specht:λ
    Rep {
        rep: String,
        /// Print only the matrix of this permutation (one-line word)
        #[arg(long)]
        perm: Option<String>,
    },
    /// Multiplicities of the irreducibles in a representation
    Decompose { rep: String },
    /// Induce the trivial (or sign) representation of a subgroup to S_n
    Induce {
        /// young:2,1 or explicit elements like "1 2 3;1 3 2"
        #[arg(long)]
        subgroup: String,
        /// Induce the sign representation instead of the trivial one
        #[arg(long)]
        sign: bool,
        /// Coset representatives, e.g. "1 2 3;2 1 3;3 2 1"
        #[arg(long)]
        transversal: Option<String>,
        /// Print only the matrix of this permutation
        #[arg(long)]
        perm: Option<String>,
    },
    /// Character of a representation restricted to a subgroup
    Restrict {
        rep: String,
        #[arg(long)]
        subgroup: String,
    },
    /// Tensor product of two representations of S_n
    Tensor { a: String, b: String },
    /// Character of the exterior square of a representation
    Ext2 { rep: String },
    /// s_λ(x_1, …, x_m), the character of the GL_m module V^λ
    GlChar { lambda: String, m: usize },
    /// dim V^λ for GL_m
    GlDim { lambda: String, m: usize },
    /// Check m^n = Σ f^λ dim V^λ over λ ⊢ n with at most m rows
    SchurWeyl { n: usize, m: usize },
}

struct Output {
    text: String,
    json: Value,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json }
    }
}

type Res<T> = Result<T, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, errw: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(errw, "{}", e.render());
            return code;
        }
    };
    if let Some(d) = cli.max_degree {
        if let Err(e) = transition::configure_max_degree(d) {
            let _ = writeln!(errw, "error: {e}");
            return 1;
        }
    }
    let mut limits = Limits::default();
    if let Some(c) = cli.module_cap {
        limits.polynomial_module = c;
    }
    if let Some(c) = cli.regular_cap {
        limits.regular = c;
    }
    if let Some(c) = cli.table_cap {
        limits.table = c;
    }
    match execute(cli.command, &limits) {
        Ok(o) => {
            let _ = match cli.format {
                Format::Text => writeln!(out, "{}", o.text),
                Format::Json => writeln!(out, "{}", o.json),
            };
            0
        }
        Err(msg) => {
            let _ = writeln!(errw, "error: {msg}");
            1
        }
    }
}

fn partition(s: &str) -> Res<Partition> {
    s.parse().map_err(err)
}

fn element(s: &str) -> Res<SymElement> {
    s.parse().map_err(err)
}

fn permutation(s: &str) -> Res<Permutation> {
    let word = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("malformed permutation {s:?}")))
        .collect::<Res<Vec<_>>>()?;
    Permutation::from_word(&word).map_err(err)
}

fn tableau(s: &str) -> Res<Tableau> {
    let rows = s
        .split('/')
        .map(|r| {
            r.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| format!("malformed tableau {s:?}: expected rows like 1,1,2/2,3"))
                })
                .collect::<Res<Vec<_>>>()
        })
        .collect::<Res<Vec<_>>>()?;
    Tableau::from_rows(rows).map_err(err)
}

fn rational(s: &str) -> Res<BigRational> {
    s.trim().parse().map_err(|_| format!("malformed rational {s:?}"))
}

fn in_basis(f: SymElement, to: Option<BasisTag>, default: BasisTag) -> Res<SymElement> {
    f.convert(to.unwrap_or(default)).map_err(err)
}

fn sym_output(f: &SymElement) -> Output {
    Output::new(f.to_string(), json!(f))
}

fn int_output(v: &BigInt) -> Output {
    Output::new(v.to_string(), json!(v.to_string()))
}

fn rat_output(v: &BigRational) -> Output {
    Output::new(v.to_string(), json!(v.to_string()))
}

/// Two aligned columns.
fn columns(rows: &[(String, String)]) -> String {
    let w = rows.iter().map(|(a, _)| a.len()).max().unwrap_or(0);
    rows.iter().map(|(a, b)| format!("{a:<w$}  {b}")).collect::<Vec<_>>().join("\n")
}

fn multiplicities(m: &BTreeMap<Partition, BigInt>) -> Output {
    let rows: Vec<(String, String)> = m.iter().map(|(l, c)| (l.to_string(), c.to_string())).collect();
    let json = m.iter().map(|(l, c)| json!({"partition": l, "multiplicity": c.to_string()})).collect();
    Output::new(columns(&rows), Value::Array(json))
}

fn matrix_text(m: &RatMatrix) -> String {
    let cells: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
    let w = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|r| r.iter().map(|c| format!("{c:>w$}")).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

fn parse_rep(s: &str, limits: &Limits) -> Res<MatrixRep> {
    let (kind, arg) = s.split_once(':').ok_or_else(|| {
        format!("malformed representation {s:?}: expected kind:argument, e.g. defining:3 or specht:2,1")
    })?;
    let degree = || {
        arg.trim()
            .parse::<usize>()
            .map_err(|_| format!("malformed representation {s:?}: expected a degree after {kind}:"))
    };
    match kind {
        "young" => reps::young_module_with(&partition(arg)?, limits).map_err(err),
        "specht" => reps::specht_module_with(&partition(arg)?, limits).map_err(err),
        _ => {
            let k: ClassicalKind = kind.parse().map_err(|e: String| {
                format!("{e}; expected trivial, sign, defining, regular, standard, young or specht")
            })?;
            reps::classical_rep_with(k, degree()?, limits).map_err(err)
        }
    }
}

fn parse_subgroup(s: &str) -> Res<SubgroupSpec> {
    if let Some(c) = s.strip_prefix("young:") {
        let parts = c
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| format!("malformed composition {c:?}")))
            .collect::<Res<Vec<_>>>()?;
        return Ok(SubgroupSpec::young(&parts));
    }
    if let Some(n) = s.strip_prefix("full:") {
        return Ok(SubgroupSpec::full(n.trim().parse().map_err(|_| format!("malformed degree {n:?}"))?));
    }
    let elements = s.split(';').map(permutation).collect::<Res<Vec<_>>>()?;
    let n = elements.first().map_or(0, Permutation::degree);
    SubgroupSpec::from_elements(n, elements).map_err(err)
}

fn word_json(p: &Permutation) -> Value {
    json!(p.word())
}

fn rep_output(rep: &MatrixRep, perm: Option<&str>) -> Res<Output> {
    if let Some(w) = perm {
        let pi = permutation(w)?;
        let m = rep.matrix(&pi).map_err(err)?;
        return Ok(Output::new(
            matrix_text(&m),
            json!({"n": rep.n(), "dim": rep.dim(), "perm": word_json(&pi), "matrix": m}),
        ));
    }
    let gens = rep.generator_matrices().map_err(err)?;
    let chi = rep.character_of().map_err(err)?;
    let mut text = format!("dim {}", rep.dim());
    for (i, g) in gens.iter().enumerate() {
        text += &format!("\ns_{}\n{}", i + 1, matrix_text(g));
    }
    text += &format!("\ncharacter\n{chi}");
    Ok(Output::new(text, json!({"n": rep.n(), "dim": rep.dim(), "generators": gens, "character": chi})))
}

fn class_function_output(chi: &ClassFunction) -> Output {
    Output::new(chi.to_string(), json!(chi))
}

fn execute(command: Command, limits: &Limits) -> Res<Output> {
    use Command::*;
    Ok(match command {
        Kostka { shape, content, list } => {
            let (l, mu) = (partition(&shape)?, partition(&content)?);
            check_sizes(&l, &mu)?;
            let k = tableau::kostka(&l, &mu);
            if !list {
                return Ok(int_output(&k));
            }
            let tabs: Vec<Tableau> =
                tableau::enumerate_ssyt_with_content(&SkewShape::straight(l), mu.parts()).collect();
            let mut text = k.to_string();
            for t in &tabs {
                text += &format!("\n\n{t}");
            }
            Output::new(text, json!({"count": k.to_string(), "tableaux": tabs}))
        }
        Flambda { shape } => int_output(&tableau::f_lambda(&partition(&shape)?)),
        Partitions { n } => {
            let ps = partitions_of(n);
            Output::new(ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n"), json!(ps))
        }
        Conjugate { partition: p } => {
            let c = partition(&p)?.conjugate();
            Output::new(c.to_string(), json!(c))
        }
        Dominates { lambda, mu } => {
            let d = partition(&lambda)?.dominates(&partition(&mu)?).map_err(err)?;
            Output::new(d.to_string(), json!(d))
        }
        Ztable { n } => {
            let ps = partitions_of(n);
            let mut rows = vec![("class".to_string(), "z  size".to_string())];
            let zw = ps.iter().map(|p| p.z().to_string().len()).max().unwrap_or(1).max(1);
            rows.extend(ps.iter().map(|p| (p.to_string(), format!("{:>zw$}  {}", p.z().to_string(), p.class_size()))));
            rows[0].1 = format!("{:>zw$}  size", "z");
            let json = ps
                .iter()
                .map(|p| json!({"partition": p, "z": p.z().to_string(), "class_size": p.class_size().to_string()}))
                .collect();
            Output::new(columns(&rows), Value::Array(json))
        }
        Rsk { input, inverse } => {
            if inverse {
                if input.len() != 2 {
                    return Err("rsk --inverse expects two tableaux P and Q".into());
                }
                let w = tableau::rsk_inverse(&tableau(&input[0])?, &tableau(&input[1])?).map_err(err)?;
                let text = w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                Output::new(text, json!(w))
            } else {
                let word = input
                    .iter()
                    .flat_map(|s| s.split(',').map(str::to_string).collect::<Vec<_>>())
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| match t.trim().parse::<usize>() {
                        Ok(x) if x > 0 => Ok(x),
                        _ => Err(format!("malformed word entry {t:?}: expected a positive integer")),
                    })
                    .collect::<Res<Vec<_>>>()?;
                let (p, q) = tableau::rsk(&word);
                let rows = |t: &Tableau| {
                    t.rows()
                        .iter()
                        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                        .collect::<Vec<_>>()
                        .join("/")
                };
                Output::new(format!("P {}\nQ {}", rows(&p), rows(&q)), json!({"p": p, "q": q}))
            }
        }
        Convert { element: e, to } => sym_output(&element(&e)?.convert(to).map_err(err)?),
        Multiply { f, g, to } => {
            let f = element(&f)?;
            let basis = f.basis();
            sym_output(&in_basis(sym::multiply(&f, &element(&g)?).map_err(err)?, to, basis)?)
        }
        Inner { f, g } => rat_output(&sym::hall_inner(&element(&f)?, &element(&g)?).map_err(err)?),
        Omega { f, to } => {
            let f = element(&f)?;
            let basis = f.basis();
            sym_output(&in_basis(sym::omega(&f).map_err(err)?, to, basis)?)
        }
        Skew { outer, inner, to } => sym_output(
            &sym::skew_schur(&partition(&outer)?, &partition(&inner)?).map_err(err)?.convert(to).map_err(err)?,
        ),
        Perp { mu, f, to } => {
            let f = element(&f)?;
            let basis = f.basis();
            sym_output(&in_basis(sym::perp(&partition(&mu)?, &f).map_err(err)?, to, basis)?)
        }
        Evaluate { f, m } => {
            let v = sym::evaluate(&element(&f)?, m).map_err(err)?;
            Output::new(v.to_string(), json!(v))
        }
        Char { lambda, mu } => {
            int_output(&coeffs::character_with(&partition(&lambda)?, &partition(&mu)?, limits).map_err(err)?)
        }
        Chartable { n } => {
            let t = coeffs::character_table_with(n, limits).map_err(err)?;
            Output::new(t.to_string(), json!(t))
        }
        Ch { n, values, to } => {
            let vals = values.split(',').map(rational).collect::<Res<Vec<_>>>()?;
            let ps = partitions_of(n);
            if vals.len() != ps.len() {
                return Err(format!("S_{n} has {} classes but {} values were given", ps.len(), vals.len()));
            }
            let chi = ClassFunction::new(n, ps.into_iter().zip(vals).collect()).map_err(err)?;
            sym_output(&coeffs::frobenius_ch(&chi).convert(to).map_err(err)?)
        }
        ChInverse { f, degree } => {
            let f = element(&f)?;
            let n = match (degree, f.degrees().as_slice()) {
                (Some(n), _) => n,
                (None, [n]) => *n,
                (None, []) => return Err("zero has no degree; pass --degree".into()),
                (None, _) => return Err("element is not homogeneous".into()),
            };
            class_function_output(&coeffs::frobenius_inverse(&f, n).map_err(err)?)
        }
        Lr { lambda, mu, nu } => int_output(
            &coeffs::littlewood_richardson(&partition(&lambda)?, &partition(&mu)?, &partition(&nu)?).map_err(err)?,
        ),
        Kronecker { lambda, mu, nu } => {
            int_output(&coeffs::kronecker(&partition(&lambda)?, &partition(&mu)?, &partition(&nu)?).map_err(err)?)
        }
        KronProduct { f, g, to } => {
            let f = element(&f)?;
            let basis = f.basis();
            sym_output(&in_basis(coeffs::kronecker_product(&f, &element(&g)?).map_err(err)?, to, basis)?)
        }
        YoungsRule { mu } => multiplicities(&coeffs::youngs_rule(&partition(&mu)?).map_err(err)?),
        Coproduct { f, to } => {
            let f = element(&f)?;
            let b = to.unwrap_or(f.basis());
            let t = hopf::coproduct_sum(&f).and_then(|t| t.convert(b, b)).map_err(err)?;
            Output::new(t.to_string(), json!(t))
        }
        CoproductStar { f, to } => {
            let f = element(&f)?;
            let b = to.unwrap_or(f.basis());
            let t = hopf::coproduct_prod(&f).and_then(|t| t.convert(b, b)).map_err(err)?;
            Output::new(t.to_string(), json!(t))
        }
        Antipode { f, to } => {
            let f = element(&f)?;
            let basis = f.basis();
            sym_output(&in_basis(hopf::antipode(&f).map_err(err)?, to, basis)?)
        }
        Cauchy { n, left, right } => {
            let t = hopf::cauchy_kernel(n, left, right).map_err(err)?;
            Output::new(t.to_string(), json!(t))
        }
        Plethysm { f, g, copies, to } => {
            let f = element(&f)?;
            let basis = f.basis();
            sym_output(&in_basis(hopf::plethysm_scaled(&f, &element(&g)?, copies).map_err(err)?, to, basis)?)
        }
        Rep { rep, perm } => rep_output(&parse_rep(&rep, limits)?, perm.as_deref())?,
        Decompose { rep } => multiplicities(&reps::decompose(&parse_rep(&rep, limits)?).map_err(err)?),
        Induce { subgroup, sign, transversal, perm } => {
            let h = parse_subgroup(&subgroup)?;
            let y = MatrixRep::one_dimensional(&h, sign);
            let ind = match transversal {
                Some(t) => {
                    let t = t.split(';').map(permutation).collect::<Res<Vec<_>>>()?;
                    reps::induce_with_transversal(&y, &t)
                }
                None => reps::induce(&y),
            }
            .map_err(err)?;
            rep_output(&ind, perm.as_deref())?
        }
        Restrict { rep, subgroup } => {
            let res = reps::restrict(&parse_rep(&rep, limits)?, &parse_subgroup(&subgroup)?).map_err(err)?;
            let chi = res.element_character().map_err(err)?;
            let rows: Vec<(String, String)> = chi.iter().map(|(g, v)| (g.to_string(), v.to_string())).collect();
            let json = chi.iter().map(|(g, v)| json!({"element": word_json(g), "value": v.to_string()})).collect();
            Output::new(columns(&rows), Value::Array(json))
        }
        Tensor { a, b } => {
            let t = reps::tensor_product(&parse_rep(&a, limits)?, &parse_rep(&b, limits)?).map_err(err)?;
            let chi = t.character_of().map_err(err)?;
            let d = reps::decompose_character(&chi).map_err(err)?;
            let dec = multiplicities(&d);
            Output::new(
                format!("dim {}\ncharacter\n{chi}\ndecomposition\n{}", t.dim(), dec.text),
                json!({"dim": t.dim(), "character": chi, "decomposition": dec.json}),
            )
        }
        Ext2 { rep } => {
            let chi = parse_rep(&rep, limits)?.character_of().map_err(err)?;
            class_function_output(&reps::exterior_square_character(&chi))
        }
        GlChar { lambda, m } => {
            let v = reps::gl_character(&partition(&lambda)?, m).map_err(err)?;
            Output::new(v.to_string(), json!(v))
        }
        GlDim { lambda, m } => int_output(&reps::gl_dimension(&partition(&lambda)?, m)),
        SchurWeyl { n, m } => {
            let ok = reps::schur_weyl_check(n, m);
            Output::new(ok.to_string(), json!(ok))
        }
    })
}

fn check_sizes(a: &Partition, b: &Partition) -> Res<()> {
    if a.size() != b.size() {
        return Err(format!("size mismatch: |{a}| = {} but |{b}| = {}", a.size(), b.size()));
    }
    Ok(())
}
