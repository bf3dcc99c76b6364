//! Command line front end. Every subcommand is a thin adapter around
//! the library: parse arguments, call one operation cluster, print.
//! Exit status: 0 on success, 1 on domain errors, 2 on usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use constructa::{
    crt_solve, factor_split, factorize, find_irreducible, find_isomorphism, gcd_euclid,
    goldbach_pair, is_irreducible, lcm, linear_solve, make_gf, make_prime_field,
    make_quotient_field, mult_generator, nat_arith_budgeted, nth_prime, primes_up_to, roots,
    totient, units_cyclic, units_group, verify_field_axioms, verify_splitting, ArithMode, ArithOp,
    ExtField, Field, FiniteField, LinearOutcome, Nat, Poly, PrimeField, TotientMode,
    DEFAULT_ITER_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "constructa",
    version,
    about = "Constructive number tower: naturals, integers, rationals, residue rings, finite fields",
    after_help = "Machine mode is line-oriented; domain errors print `error <code>`."
)]
struct Cli {
    /// Line-oriented output for scripts.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    Add,
    Mul,
    Pow,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Literal successor/addition iterates (budgeted).
    Iterate,
    /// Big-integer arithmetic.
    Fast,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    Add,
    Mul,
}

#[derive(Subcommand)]
enum Command {
    /// Natural-number arithmetic, optionally by literal iteration.
    Nat {
        op: OpArg,
        m: Nat,
        n: Nat,
        #[arg(long, value_enum, default_value_t = ModeArg::Fast)]
        mode: ModeArg,
    },
    /// Factor a natural number into primes.
    Factor { n: Nat },
    /// Greatest common divisor, optionally with the Euclid trace.
    Gcd {
        x: Nat,
        y: Nat,
        /// Print every division step.
        #[arg(long)]
        steps: bool,
    },
    /// Least common multiple.
    Lcm { x: Nat, y: Nat },
    /// Primes up to a limit, or the k-th prime with --nth.
    Primes {
        limit: u64,
        /// Interpret the argument as a 0-based index instead.
        #[arg(long)]
        nth: bool,
    },
    /// Two primes summing to an even number (least first prime).
    Goldbach { n: Nat },
    /// Solve simultaneous congruences given as residue/modulus pairs.
    Crt {
        /// r1 m1 r2 m2 ...
        #[arg(required = true, num_args = 2..)]
        pairs: Vec<u64>,
    },
    /// The residue ring Z_n: summary or an operation table.
    Zn {
        n: u64,
        #[arg(long, value_enum)]
        table: Option<TableArg>,
    },
    /// Polynomial arithmetic over Z_p (coefficients as csv, ascending).
    Poly {
        #[command(subcommand)]
        cmd: PolyCmd,
    },
    /// The finite field GF(p^n) with its canonical modulus.
    Gf {
        p: u64,
        n: u32,
        /// Check splitting, cyclicity, and the field axioms.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum)]
        table: Option<TableArg>,
    },
    /// Isomorphism between two quotient-field presentations over Z_p.
    Iso { p: u64, left: String, right: String },
    /// Solve a square linear system over Z_p (augmented rows as csv).
    Solve {
        p: u64,
        #[arg(required = true)]
        rows: Vec<String>,
    },
}

#[derive(Subcommand)]
enum PolyCmd {
    Add {
        #[arg(long)]
        field: u64,
        a: String,
        b: String,
    },
    Mul {
        #[arg(long)]
        field: u64,
        a: String,
        b: String,
    },
    /// Divide b by a: quotient and remainder.
    Divmod {
        #[arg(long)]
        field: u64,
        b: String,
        a: String,
    },
    /// Evaluate at a point.
    Eval {
        #[arg(long)]
        field: u64,
        a: String,
        x: u64,
    },
    Roots {
        #[arg(long)]
        field: u64,
        a: String,
    },
    Irreducible {
        #[arg(long)]
        field: u64,
        a: String,
    },
    /// Least monic irreducible of the given degree.
    Find {
        #[arg(long)]
        field: u64,
        degree: u32,
    },
    /// Split off the least irreducible factor.
    Split {
        #[arg(long)]
        field: u64,
        a: String,
    },
    Derive {
        #[arg(long)]
        field: u64,
        a: String,
    },
}

enum Failure {
    Usage(String),
    Domain { code: String, message: String },
}

impl Failure {
    fn domain(code: &str, message: String) -> Self {
        Failure::Domain { code: code.to_string(), message }
    }
}

macro_rules! from_domain_error {
    ($($ty:ty),*) => {$(
        impl From<$ty> for Failure {
            fn from(e: $ty) -> Self {
                Failure::domain(e.code(), e.to_string())
            }
        }
    )*};
}

from_domain_error!(
    constructa::PeanoError,
    constructa::DivisibilityError,
    constructa::ModularError,
    constructa::PolyError,
    constructa::FieldError
);

fn main() -> ExitCode {
    let cli = Cli::parse();
    let machine = cli.machine;
    match run(cli.command, machine) {
        Ok(lines) => {
            for line in lines {
                println!("{line}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain { code, message }) => {
            if machine {
                println!("error {code}");
            } else {
                eprintln!("error: {message}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("usage error: {message}");
            ExitCode::from(2)
        }
    }
}

fn iterate_budget() -> Result<u64, Failure> {
    match std::env::var("CONSTRUCTA_ITER_BUDGET") {
        Ok(raw) => raw
            .parse()
            .map_err(|_| Failure::Usage(format!("CONSTRUCTA_ITER_BUDGET is not a number: {raw}"))),
        Err(_) => Ok(DEFAULT_ITER_BUDGET),
    }
}

fn parse_poly(field: PrimeField, text: &str) -> Result<Poly<PrimeField>, Failure> {
    Poly::from_csv(field, text)
        .map_err(|e| Failure::Usage(format!("bad polynomial {text:?}: {e}")))
}

fn poly_line(a: &Poly<PrimeField>, machine: bool) -> String {
    if machine {
        a.to_csv()
    } else {
        a.pretty()
    }
}

fn run(command: Command, machine: bool) -> Result<Vec<String>, Failure> {
    match command {
        Command::Nat { op, m, n, mode } => {
            let op = match op {
                OpArg::Add => ArithOp::Add,
                OpArg::Mul => ArithOp::Mul,
                OpArg::Pow => ArithOp::Pow,
            };
            let mode = match mode {
                ModeArg::Iterate => ArithMode::Iterate,
                ModeArg::Fast => ArithMode::Fast,
            };
            let value = nat_arith_budgeted(op, &m, &n, mode, iterate_budget()?)?;
            Ok(vec![value.to_string()])
        }
        Command::Factor { n } => {
            let fact = factorize(&n)?;
            if machine {
                Ok(fact.pairs().iter().map(|(p, e)| format!("{p} {e}")).collect())
            } else {
                Ok(vec![format!("{n} = {fact}")])
            }
        }
        Command::Gcd { x, y, steps } => {
            let (g, trace) = gcd_euclid(&x, &y, steps)?;
            let mut lines = vec![g.to_string()];
            if let Some(trace) = trace {
                for s in &trace.steps {
                    if machine {
                        lines.push(format!("{} {} {} {}", s.b, s.q, s.a, s.r));
                    } else {
                        lines.push(format!("{} = {}*{} + {}", s.b, s.q, s.a, s.r));
                    }
                }
            }
            Ok(lines)
        }
        Command::Lcm { x, y } => Ok(vec![lcm(&x, &y)?.to_string()]),
        Command::Primes { limit, nth } => {
            if nth {
                return Ok(vec![nth_prime(limit).to_string()]);
            }
            let primes = primes_up_to(limit);
            if machine {
                Ok(primes.iter().map(u64::to_string).collect())
            } else {
                Ok(vec![primes
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")])
            }
        }
        Command::Goldbach { n } => {
            let (p, q) = goldbach_pair(&n)?;
            if machine {
                Ok(vec![format!("{p} {q}")])
            } else {
                Ok(vec![format!("{n} = {p} + {q}")])
            }
        }
        Command::Crt { pairs } => {
            if pairs.len() % 2 != 0 {
                return Err(Failure::Usage(
                    "crt expects residue/modulus pairs (an even number of values)".into(),
                ));
            }
            let pairs: Vec<(Nat, Nat)> = pairs
                .chunks_exact(2)
                .map(|c| (Nat::from(c[0]), Nat::from(c[1])))
                .collect();
            let x = crt_solve(&pairs)?;
            let product = pairs
                .iter()
                .fold(Nat::one(), |acc, (_, m)| &acc * m);
            if machine {
                Ok(vec![format!("{x} {product}")])
            } else {
                Ok(vec![format!("x = {x} (mod {product})")])
            }
        }
        Command::Zn { n, table } => match table {
            Some(which) => {
                let ring = constructa::ZnRing::new(n)?;
                let (corner, op): (&str, fn(&constructa::ZnRing, u64, u64) -> u64) = match which {
                    TableArg::Add => ("+", |r, a, b| r.add(a, b)),
                    TableArg::Mul => ("*", |r, a, b| r.mul(a, b)),
                };
                Ok(render_table(corner, n, |a, b| op(&ring, a, b), machine))
            }
            None => {
                let group = units_group(n)?;
                let phi = totient(n, TotientMode::Formula)?;
                let units = group
                    .units()
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(" ");
                let mut lines = if machine {
                    vec![format!("units {units}"), format!("totient {phi}")]
                } else {
                    vec![format!("Z_{n}"), format!("units: {units}"), format!("totient: {phi}")]
                };
                if n >= 3 {
                    let report = units_cyclic(n)?;
                    lines.push(match (machine, report.cyclic, report.generator) {
                        (true, true, Some(g)) => format!("cyclic 1 {g}"),
                        (true, _, _) => "cyclic 0".to_string(),
                        (false, true, Some(g)) => format!("units cyclic: yes (generator {g})"),
                        (false, _, _) => "units cyclic: no".to_string(),
                    });
                }
                Ok(lines)
            }
        },
        Command::Poly { cmd } => run_poly(cmd, machine),
        Command::Gf { p, n, verify, table } => {
            let field = make_gf(p, n)?;
            let mut lines = vec![format!(
                "GF({p}^{n}) modulus={}",
                field.modulus().to_csv()
            )];
            if verify {
                verify_splitting(&field)?;
                check_cyclic(&field)?;
                verify_field_axioms(&field)?;
                lines.push("split:ok cyclic:ok axioms:ok".to_string());
            }
            if let Some(which) = table {
                let op: fn(&ExtField, u64, u64) -> u64 = match which {
                    TableArg::Add => {
                        |f, a, b| f.label(&f.add(&f.element(a), &f.element(b)))
                    }
                    TableArg::Mul => {
                        |f, a, b| f.label(&f.mul(&f.element(a), &f.element(b)))
                    }
                };
                let corner = match which {
                    TableArg::Add => "+",
                    TableArg::Mul => "*",
                };
                lines.extend(render_table(corner, field.order(), |a, b| op(&field, a, b), machine));
            }
            Ok(lines)
        }
        Command::Iso { p, left, right } => {
            let base = make_prime_field(p)?;
            let left = make_quotient_field(base, parse_poly(base, &left)?)?;
            let right = make_quotient_field(base, parse_poly(base, &right)?)?;
            let iso = find_isomorphism(&left, &right)?;
            if machine {
                Ok((0..left.order())
                    .map(|l| format!("{l} {}", right.label(&iso.apply(&left.element(l)))))
                    .collect())
            } else {
                Ok(vec![
                    format!(
                        "GF({}^{}): {} ~ {}",
                        p,
                        left.extension_degree(),
                        left.modulus().to_csv(),
                        right.modulus().to_csv()
                    ),
                    format!("x -> {}", iso.image_of_generator().to_csv()),
                ])
            }
        }
        Command::Solve { p, rows } => {
            let field = make_prime_field(p)?;
            let width = rows.len() + 1;
            let mut a = Vec::with_capacity(rows.len());
            let mut b = Vec::with_capacity(rows.len());
            for row in &rows {
                let mut entries = Vec::with_capacity(width);
                for cell in row.split(',') {
                    let v: u64 = cell
                        .trim()
                        .parse()
                        .map_err(|_| Failure::Usage(format!("bad matrix entry {cell:?}")))?;
                    if v >= p {
                        return Err(Failure::Usage(format!(
                            "entry {v} is not a residue mod {p}"
                        )));
                    }
                    entries.push(v);
                }
                if entries.len() != width {
                    return Err(Failure::Usage(format!(
                        "each row needs {width} entries (matrix columns plus right-hand side)"
                    )));
                }
                b.push(entries.pop().expect("width >= 1"));
                a.push(entries);
            }
            match linear_solve(&field, &a, &b)? {
                LinearOutcome::Unique(x) => {
                    let xs = x.iter().map(u64::to_string).collect::<Vec<_>>();
                    if machine {
                        Ok(xs)
                    } else {
                        Ok(vec![format!("x = {}", xs.join(","))])
                    }
                }
                LinearOutcome::Singular { pivot_column } => {
                    if machine {
                        Ok(vec![format!("singular {pivot_column}")])
                    } else {
                        Ok(vec![format!("singular at column {pivot_column}")])
                    }
                }
            }
        }
    }
}

fn run_poly(cmd: PolyCmd, machine: bool) -> Result<Vec<String>, Failure> {
    match cmd {
        PolyCmd::Add { field, a, b } => {
            let f = make_prime_field(field)?;
            let sum = parse_poly(f, &a)?.add(&parse_poly(f, &b)?)?;
            Ok(vec![poly_line(&sum, machine)])
        }
        PolyCmd::Mul { field, a, b } => {
            let f = make_prime_field(field)?;
            let prod = parse_poly(f, &a)?.mul(&parse_poly(f, &b)?)?;
            Ok(vec![poly_line(&prod, machine)])
        }
        PolyCmd::Divmod { field, b, a } => {
            let f = make_prime_field(field)?;
            let (q, r) = parse_poly(f, &b)?.divmod(&parse_poly(f, &a)?)?;
            if machine {
                Ok(vec![format!("q {}", q.to_csv()), format!("r {}", r.to_csv())])
            } else {
                Ok(vec![format!("q = {}", q.pretty()), format!("r = {}", r.pretty())])
            }
        }
        PolyCmd::Eval { field, a, x } => {
            let f = make_prime_field(field)?;
            if x >= f.order() {
                return Err(Failure::Usage(format!("{x} is not a residue mod {field}")));
            }
            Ok(vec![parse_poly(f, &a)?.evaluate(&x).to_string()])
        }
        PolyCmd::Roots { field, a } => {
            let f = make_prime_field(field)?;
            let found = roots(&parse_poly(f, &a)?)?;
            let labels: Vec<String> = found.iter().map(u64::to_string).collect();
            if machine {
                Ok(labels)
            } else if labels.is_empty() {
                Ok(vec!["roots: none".to_string()])
            } else {
                Ok(vec![format!("roots: {}", labels.join(" "))])
            }
        }
        PolyCmd::Irreducible { field, a } => {
            let f = make_prime_field(field)?;
            let verdict = is_irreducible(&parse_poly(f, &a)?)?;
            if machine {
                Ok(vec![u64::from(verdict).to_string()])
            } else {
                Ok(vec![if verdict { "irreducible" } else { "reducible" }.to_string()])
            }
        }
        PolyCmd::Find { field, degree } => {
            let found = find_irreducible(field, degree as usize)?;
            Ok(vec![found.to_csv()])
        }
        PolyCmd::Split { field, a } => {
            let f = make_prime_field(field)?;
            let (factor, cofactor) = factor_split(&parse_poly(f, &a)?)?;
            if machine {
                Ok(vec![factor.to_csv(), cofactor.to_csv()])
            } else {
                Ok(vec![
                    format!("factor = {}", factor.pretty()),
                    format!("cofactor = {}", cofactor.pretty()),
                ])
            }
        }
        PolyCmd::Derive { field, a } => {
            let f = make_prime_field(field)?;
            Ok(vec![poly_line(&parse_poly(f, &a)?.derivative(), machine)])
        }
    }
}

// The trivial group of GF(2) is cyclic without a generator search; the
// generator operation itself requires at least three elements.
fn check_cyclic(field: &ExtField) -> Result<(), Failure> {
    if field.order() >= 3 {
        mult_generator(field)?;
    }
    Ok(())
}

fn render_table(corner: &str, n: u64, op: impl Fn(u64, u64) -> u64, machine: bool) -> Vec<String> {
    if machine {
        let mut lines = Vec::with_capacity((n * n) as usize);
        for a in 0..n {
            for b in 0..n {
                lines.push(format!("{a} {b} {}", op(a, b)));
            }
        }
        return lines;
    }
    let mut lines = Vec::with_capacity(n as usize + 1);
    let header = std::iter::once(corner.to_string())
        .chain((0..n).map(|b| b.to_string()))
        .collect::<Vec<_>>()
        .join(" ");
    lines.push(header);
    for a in 0..n {
        let row = std::iter::once(a.to_string())
            .chain((0..n).map(|b| op(a, b).to_string()))
            .collect::<Vec<_>>()
            .join(" ");
        lines.push(row);
    }
    lines
}
