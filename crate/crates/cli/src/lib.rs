//! `qla`, a batch front end over `quatlinalg`.
//!
//! Every subcommand reads QMAT files (`-` for standard input), runs one
//! library operation and writes QMAT text to standard output or `-o PATH`.
//! Exit codes: 0 success, 1 usage or validation error, 2 numerical failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use quatlinalg::adjoint::{inv_left_with, inv_right_with};
use quatlinalg::complex::DEFAULT_PIVOT_TOL;
use quatlinalg::spectral::{left_eig_in_subfield, verify_left_pair, verify_right_pair};
use quatlinalg::subspace::{basis, rank_left, rank_right, DEFAULT_RANK_TOL};
use quatlinalg::tensor::{vec_identity_kr, vec_identity_kron};
use quatlinalg::text::parse_quaternion;
use quatlinalg::{
    adjoint, dqft, from_adjoint, idqft, khatri_rao, kron, read_qmat, right_eig, write_qmat, AdjointSide, Axes,
    ComplexMatrix, ProductOrder, PureUnitQuaternion, QdftKind, QuatMatrix, Quaternion, SubspaceKind, TripleOrder,
    VecForm, WidelyLinearSystem,
};

/// Axis values further than this from unit modulus are rejected.
const AXIS_NORMALIZE_LIMIT: f64 = 1e-6;

#[derive(Parser, Debug)]
#[command(name = "qla", version, about = "Quaternion matrix algebra with left and right products")]
struct Cli {
    /// Write the result here instead of standard output.
    #[arg(short = 'o', long = "output", global = true, value_name = "PATH")]
    output: Option<String>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// A ·L B or A ·R B.
    Mul {
        #[arg(long, value_enum)]
        order: Side,
        a: String,
        b: String,
    },
    /// Three-factor product with one of the six scalar orders.
    Triple {
        #[arg(long, value_enum)]
        order: Triple,
        a: String,
        b: String,
        c: String,
    },
    /// Left or right inverse.
    Inv {
        #[arg(long, value_enum)]
        side: Side,
        #[command(flatten)]
        axes: AxisArgs,
        /// Pivot threshold of the complex elimination.
        #[arg(long)]
        tol: Option<f64>,
        a: String,
    },
    /// Complex adjoint, written with entries a + b·i.
    Adjoint {
        #[arg(long, value_enum)]
        side: Side,
        #[command(flatten)]
        axes: AxisArgs,
        /// Read a 2M x 2N adjoint with entries in ℂ_i and rebuild the quaternion matrix.
        #[arg(long)]
        reverse: bool,
        a: String,
    },
    /// Dimension and basis of one of the eight fundamental subspaces.
    Subspace {
        /// LR, RR, LC, RC, LRN, RRN, LCN or RCN.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        tol: Option<f64>,
        a: String,
    },
    /// Left or right rank.
    Rank {
        #[arg(long, value_enum)]
        side: Side,
        a: String,
    },
    /// Left or right Kronecker product A ⊗ B.
    Kron {
        #[arg(long, value_enum)]
        side: Side,
        a: String,
        b: String,
    },
    /// Columnwise Kronecker product.
    KhatriRao {
        #[arg(long, value_enum)]
        side: Side,
        a: String,
        b: String,
    },
    /// Evaluate both sides of a vectorization identity and print the residual.
    VecCheck {
        /// kron-FORM or kr-FORM with FORM one of L_R, R_L, LB_R, RB_L.
        #[arg(long)]
        identity: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        a: String,
        b: String,
        c: String,
    },
    /// Solve A X + B X* = C for X with entries in ℂ_μ.
    SolveWidelyLinear {
        #[command(flatten)]
        axes: AxisArgs,
        a: String,
        b: String,
        c: String,
    },
    /// Right eigendecomposition, or left eigenpairs of a ℂ_μ matrix.
    Eig {
        #[arg(long, value_enum, default_value = "right")]
        side: Side,
        /// Subfield axis for `--side left`.
        #[arg(long)]
        mu: Option<String>,
        /// Also write the eigenvalue column here.
        #[arg(long, value_name = "PATH")]
        values: Option<String>,
        /// Also write the eigenvector matrix here.
        #[arg(long, value_name = "PATH")]
        vectors: Option<String>,
        a: String,
    },
    /// Check the eigenpairs (column m of Q, entry m of L) of A.
    EigVerify {
        #[arg(long, value_enum, default_value = "right")]
        side: Side,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        a: String,
        q: String,
        lambda: String,
    },
    /// Forward discrete quaternion Fourier transform.
    Qdft(QdftArgs),
    /// Inverse discrete quaternion Fourier transform.
    Iqdft(QdftArgs),
    /// Rewrite a QMAT file in canonical form.
    Convert { a: String },
}

#[derive(Args, Debug)]
struct AxisArgs {
    /// Axis μ of the embedding.
    #[arg(long)]
    mu: Option<String>,
    /// Axis μ⊥, orthogonal to μ.
    #[arg(long)]
    mu_perp: Option<String>,
}

#[derive(Args, Debug)]
struct QdftArgs {
    /// 1 two-side, 2 left-side, 3 right-side.
    #[arg(long, default_value = "1")]
    kind: String,
    #[arg(long, default_value = "i")]
    mu1: String,
    #[arg(long, default_value = "j")]
    mu2: String,
    a: String,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Side {
    Left,
    Right,
}

impl From<Side> for ProductOrder {
    fn from(s: Side) -> ProductOrder {
        match s {
            Side::Left => ProductOrder::Left,
            Side::Right => ProductOrder::Right,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Triple {
    Ll,
    Rr,
    LOfR,
    LbThenR,
    RbThenL,
    ROfL,
}

impl From<Triple> for TripleOrder {
    fn from(t: Triple) -> TripleOrder {
        match t {
            Triple::Ll => TripleOrder::LL,
            Triple::Rr => TripleOrder::RR,
            Triple::LOfR => TripleOrder::LOfR,
            Triple::LbThenR => TripleOrder::LBThenR,
            Triple::RbThenL => TripleOrder::RBThenL,
            Triple::ROfL => TripleOrder::ROfL,
        }
    }
}

/// Failure of one invocation together with its exit code.
struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure { code: 1, msg: msg.into() }
    }
}

impl From<quatlinalg::Error> for Failure {
    fn from(e: quatlinalg::Error) -> Self {
        Failure {
            code: if e.is_numerical() { 2 } else { 1 },
            msg: e.to_string(),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    let mut warnings = Vec::new();
    let result = execute(&cli.cmd, &mut warnings);
    for w in &warnings {
        let _ = writeln!(stderr, "warning: {w}");
    }
    let (text, code) = match result {
        Ok(out) => out,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.msg);
            return f.code;
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                let _ = writeln!(stderr, "error: cannot write '{path}': {e}");
                return 1;
            }
        }
        None => {
            if stdout.write_all(text.as_bytes()).is_err() {
                return 1;
            }
        }
    }
    code
}

fn load(path: &str) -> Outcome<QuatMatrix> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::usage(format!("cannot read standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read '{path}': {e}")))?
    };
    read_qmat(&text).map_err(|e| Failure::usage(format!("{path}: {e}")))
}

fn save(path: &str, m: &QuatMatrix) -> Outcome<()> {
    std::fs::write(path, write_qmat(m)).map_err(|e| Failure::usage(format!("cannot write '{path}': {e}")))
}

/// Parses a pure unit quaternion, renormalizing small deviations from unit modulus.
fn parse_axis(flag: &str, s: &str, warnings: &mut Vec<String>) -> Outcome<PureUnitQuaternion> {
    let q = parse_quaternion(s).map_err(|e| Failure::usage(format!("--{flag}: {e}")))?;
    if q.w != 0.0 {
        return Err(Failure::usage(format!("--{flag}: axis '{s}' has a nonzero scalar part")));
    }
    let n = q.vector_norm();
    let off = (n - 1.0).abs();
    if off >= AXIS_NORMALIZE_LIMIT {
        return Err(Failure::usage(format!("--{flag}: axis '{s}' has modulus {n}, expected 1")));
    }
    if off > f64::EPSILON {
        warnings.push(format!("--{flag}: axis '{s}' normalized from modulus {n}"));
    }
    Ok(PureUnitQuaternion::new(q.x, q.y, q.z)?)
}

fn axes(args: &AxisArgs, warnings: &mut Vec<String>) -> Outcome<Axes> {
    let mu = match &args.mu {
        Some(s) => parse_axis("mu", s, warnings)?,
        None => PureUnitQuaternion::I,
    };
    match &args.mu_perp {
        Some(s) => Ok(Axes::new(mu, parse_axis("mu-perp", s, warnings)?)?),
        None if args.mu.is_none() => Ok(Axes::default()),
        None => Ok(Axes::from_mu(mu)),
    }
}

fn complex_to_qmat(c: &ComplexMatrix) -> QuatMatrix {
    QuatMatrix::from_fn(c.rows(), c.cols(), |r, k| Quaternion::new(c[(r, k)].re, c[(r, k)].im, 0.0, 0.0))
}

fn qmat_to_complex(m: &QuatMatrix) -> Outcome<ComplexMatrix> {
    Ok(quatlinalg::adjoint::subfield_to_complex(m, PureUnitQuaternion::I, 0.0)?)
}

fn side_of(side: Side) -> AdjointSide {
    match side {
        Side::Left => AdjointSide::LeftAdjoint,
        Side::Right => AdjointSide::RightAdjoint,
    }
}

fn parse_identity(s: &str) -> Outcome<(bool, VecForm)> {
    let bad = || Failure::usage(format!("--identity: expected kron-FORM or kr-FORM, got '{s}'"));
    let (family, form) = s.split_once('-').ok_or_else(bad)?;
    let kr = match family {
        "kron" => false,
        "kr" => true,
        _ => return Err(bad()),
    };
    let form = form.parse::<VecForm>().map_err(|_| bad())?;
    Ok((kr, form))
}

fn execute(cmd: &Command, warnings: &mut Vec<String>) -> Outcome<(String, i32)> {
    let single = |m: QuatMatrix| Ok((write_qmat(&m), 0));
    match cmd {
        Command::Mul { order, a, b } => single(load(a)?.mul(&load(b)?, (*order).into())?),
        Command::Triple { order, a, b, c } => single(load(a)?.triple_product(&load(b)?, &load(c)?, (*order).into())?),
        Command::Inv { side, axes: ax, tol, a } => {
            let (a, ax) = (load(a)?, axes(ax, warnings)?);
            let tol = tol.unwrap_or(DEFAULT_PIVOT_TOL);
            single(match side {
                Side::Left => inv_left_with(&a, &ax, tol)?,
                Side::Right => inv_right_with(&a, &ax, tol)?,
            })
        }
        Command::Adjoint { side, axes: ax, reverse, a } => {
            let (a, ax) = (load(a)?, axes(ax, warnings)?);
            if *reverse {
                single(from_adjoint(&qmat_to_complex(&a)?, side_of(*side), &ax)?)
            } else {
                single(complex_to_qmat(&adjoint(&a, side_of(*side), &ax)))
            }
        }
        Command::Subspace { kind, tol, a } => {
            let kind = kind.parse::<SubspaceKind>().map_err(|e| Failure::usage(format!("--kind: {e}")))?;
            let b = basis(&load(a)?, kind, tol.unwrap_or(DEFAULT_RANK_TOL));
            let mut out = format!("# {kind} dim {}\n", b.dim());
            if let Some(m) = b.to_matrix() {
                out.push_str(&write_qmat(&m));
            }
            Ok((out, 0))
        }
        Command::Rank { side, a } => {
            let a = load(a)?;
            let r = match side {
                Side::Left => rank_left(&a),
                Side::Right => rank_right(&a),
            };
            Ok((format!("{r}\n"), 0))
        }
        Command::Kron { side, a, b } => single(kron(&load(a)?, &load(b)?, (*side).into())),
        Command::KhatriRao { side, a, b } => single(khatri_rao(&load(a)?, &load(b)?, (*side).into())?),
        Command::VecCheck { identity, tol, a, b, c } => {
            let (kr, form) = parse_identity(identity)?;
            let (a, b, c) = (load(a)?, load(b)?, load(c)?);
            let (lhs, rhs) = if kr {
                vec_identity_kr(&a, &b, &c, form)?
            } else {
                vec_identity_kron(&a, &b, &c, form)?
            };
            let r = (&lhs - &rhs).frobenius_norm();
            let out = format!("residual {r:e}\n");
            if r > *tol {
                return Ok((out, 2));
            }
            Ok((out, 0))
        }
        Command::SolveWidelyLinear { axes: ax, a, b, c } => {
            let sys = WidelyLinearSystem::new(load(a)?, load(b)?, load(c)?, axes(ax, warnings)?)?;
            single(sys.solve()?)
        }
        Command::Eig { side, mu, values, vectors, a } => {
            let a = load(a)?;
            let (lambda, q) = match side {
                Side::Right => {
                    let dec = right_eig(&a)?;
                    (dec.lambda, dec.q)
                }
                Side::Left => {
                    let mu = match mu {
                        Some(s) => parse_axis("mu", s, warnings)?,
                        None => PureUnitQuaternion::I,
                    };
                    let pairs = left_eig_in_subfield(&a, mu)?;
                    let mut q = QuatMatrix::zeros(a.rows(), a.cols());
                    for (m, p) in pairs.iter().enumerate() {
                        for r in 0..a.rows() {
                            q[(r, m)] = p.q[(r, 0)];
                        }
                    }
                    (pairs.iter().map(|p| p.lambda).collect(), q)
                }
            };
            let lambda = QuatMatrix::column(&lambda)?;
            if let Some(p) = values {
                save(p, &lambda)?;
            }
            if let Some(p) = vectors {
                save(p, &q)?;
            }
            let mut out = String::from("# eigenvalues\n");
            out.push_str(&write_qmat(&lambda));
            out.push_str("# eigenvectors\n");
            out.push_str(&write_qmat(&q));
            Ok((out, 0))
        }
        Command::EigVerify { side, tol, a, q, lambda } => {
            let (a, q, lambda) = (load(a)?, load(q)?, load(lambda)?);
            if !lambda.is_column() || lambda.rows() != q.cols() {
                return Err(Failure::usage(format!(
                    "eigenvalues must be a {}x1 column, got {}x{}",
                    q.cols(),
                    lambda.rows(),
                    lambda.cols()
                )));
            }
            let mut out = String::new();
            let mut all = true;
            for m in 0..q.cols() {
                let (v, l) = (q.col(m), lambda[(m, 0)]);
                let ok = match side {
                    Side::Right => verify_right_pair(&a, &v, l, *tol)?,
                    Side::Left => verify_left_pair(&a, &v, l, *tol)?,
                };
                all &= ok;
                let _ = writeln!(out, "pair {m} {}", if ok { "ok" } else { "fail" });
            }
            Ok((out, if all { 0 } else { 2 }))
        }
        Command::Qdft(args) | Command::Iqdft(args) => {
            let kind = args.kind.parse::<QdftKind>().map_err(|e| Failure::usage(format!("--kind: {e}")))?;
            let mu1 = parse_axis("mu1", &args.mu1, warnings)?;
            let mu2 = parse_axis("mu2", &args.mu2, warnings)?;
            let a = load(&args.a)?;
            single(match cmd {
                Command::Qdft(_) => dqft(&a, kind, mu1, mu2)?,
                _ => idqft(&a, kind, mu1, mu2)?,
            })
        }
        Command::Convert { a } => single(load(a)?),
    }
}
