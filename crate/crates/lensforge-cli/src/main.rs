//! `lensforge` — exact calculations with lens spaces, Hopf-link covers,
//! cyclic quotient germs, and Hirzebruch-Jung resolution chains.

mod report;

use clap::{Parser, Subcommand, ValueEnum};
use lensforge::hj::{hj_expand, hj_reverse_dual, resolution_graph};
use lensforge::lens::{dehn_fill, is_homeomorphic, mod_inverse, normalize_lens};
use lensforge::quotient::{
    chain_identity_check, hilbert_basis, nu_orbit_invariance, orbit_size_census, sample_points,
    QuotientGerm,
};
use lensforge::torus_cover::{
    covering_equivalent, covering_matrix, generic_degree, link_of_x, CoveringData, TorusCurve,
};
use lensforge::Error;
use num::{BigInt, BigRational};
use report::*;
use serde::Serialize;
use std::collections::BTreeMap;

const CENSUS_LIMIT: i64 = 30;
const VERIFY_POINTS: usize = 100;
/// Magnitude cap on every integer flag; keeps all library products inside
/// i64 with no overflow.
const INPUT_LIMIT: i64 = 1_000_000;
/// Enumeration-heavy commands get tighter caps so no request can stall.
const BASIS_N_LIMIT: i64 = 500;
const ORBITS_N_LIMIT: i64 = 4096;
const VERIFY_N_LIMIT: i64 = 1000;

const EXIT_CODES_HELP: &str = "Exit codes:
  0   success
  2   command-line parse error
  3   InvalidInput        a precondition on the integer inputs failed
  4   NonManifoldInput    gcd(n, q) != 1 where coprimality is required
  5   NotInvertible       q has no inverse modulo n
  6   NonPrimitiveCurve   curve coefficients are not coprime
  7   MalformedMatrix     matrix is not a valid covering matrix
  8   Degenerate          operation undefined in the range n <= 1
  9   InvalidDegree       covering degree below 1
  10  BoundTooSmall       enumeration bound below the 2n threshold
  11  NotApplicable       manifold outside the scope of the operation
  12  BoundTooLarge       census bound above the guard (30)
  13  UnsupportedFormat   output format not available for this command

Input ranges:
  every integer flag is capped at |value| <= 1000000; in addition
  `basis` takes n <= 500 and bound <= 4n, `orbits` n <= 4096,
  `verify-chain` n <= 1000, and `census` max-n <= 30.

Environment:
  LENSFORGE_COLOR=1   colorize text output (default off)";

#[derive(Parser)]
#[command(
    name = "lensforge",
    version,
    about = "Exact arithmetic for lens spaces, branched covers of the Hopf link,\n\
             cyclic quotient singularities, and Hirzebruch-Jung resolution chains",
    after_help = EXIT_CODES_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format (dot is only available for `resolve`)
    #[arg(long = "output-format", global = true, value_enum, default_value_t = OutputFormat::Json)]
    output_format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize a raw pair (n, q) to the canonical lens-space name
    Classify {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
    },
    /// Decide orientation-preserving homeomorphism of L(n,q) and L(n,q2)
    Homeo {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        #[arg(long, allow_negative_numbers = true)]
        q2: i64,
    },
    /// Dehn-fill along the curve m1 = n*l2 - q*m2 on the Heegaard torus
    Fill {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
    },
    /// Covering matrix [[a*n, a*q], [0, b]] and generic degree of a cover
    Cover {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        q: i64,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
    },
    /// Decide equivalence of two covers (n,q,a,b) and (n2,q2,a2,b2);
    /// n2, a2, b2 default to n, a, b
    Equiv {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        q: i64,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        q2: i64,
        #[arg(long)]
        n2: Option<i64>,
        #[arg(long)]
        a2: Option<i64>,
        #[arg(long)]
        b2: Option<i64>,
    },
    /// Link of the hypersurface z^n = x*y^(n-q), with the full trace
    #[command(name = "link-x")]
    LinkX {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        q: i64,
    },
    /// Minimal generators of the invariant-monomial semigroup of C(n,q)
    Basis {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        q: i64,
        /// Enumeration bound on total degree (default 2n, the completeness threshold)
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Hirzebruch-Jung expansion of n/q and its resolution chain
    Resolve {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        q: i64,
    },
    /// Orbit census of the phase-class action of C(n,q) on (Z/n)^2
    Orbits {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        q: i64,
    },
    /// Check the composed-morphism identity and orbit invariance of the
    /// normalization on 100 deterministic rational sample points
    #[command(name = "verify-chain")]
    VerifyChain {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        q: i64,
    },
    /// Tabulate slope dual, basis size, chain length, and normality for
    /// every coprime (n, q) with n <= max-n
    Census {
        #[arg(long = "max-n")]
        max_n: i64,
    },
}

struct Rendering {
    json: String,
    text: Vec<String>,
    dot: Option<String>,
}

fn main() {
    let cli = Cli::parse();
    let rendering = match run(&cli.command) {
        Ok(r) => r,
        Err(e) => fail(cli.output_format, &e),
    };
    match cli.output_format {
        OutputFormat::Json => println!("{}", rendering.json),
        OutputFormat::Text => {
            let color = std::env::var("LENSFORGE_COLOR").as_deref() == Ok("1");
            for (i, line) in rendering.text.iter().enumerate() {
                if i == 0 && color {
                    println!("\x1b[32m{line}\x1b[0m");
                } else {
                    println!("{line}");
                }
            }
        }
        OutputFormat::Dot => match rendering.dot {
            Some(dot) => println!("{dot}"),
            None => {
                let body = ErrorBody {
                    code: "UnsupportedFormat",
                    message: "dot output is only available for `resolve`".into(),
                    exit_code: 13,
                };
                eprintln!("error[{}]: {}", body.code, body.message);
                std::process::exit(13);
            }
        },
    }
}

fn exit_code(e: &Error) -> i32 {
    match e.code() {
        "InvalidInput" => 3,
        "NonManifoldInput" => 4,
        "NotInvertible" => 5,
        "NonPrimitiveCurve" => 6,
        "MalformedMatrix" => 7,
        "Degenerate" => 8,
        "InvalidDegree" => 9,
        "BoundTooSmall" => 10,
        "NotApplicable" => 11,
        "BoundTooLarge" => 12,
        _ => 1,
    }
}

fn fail(format: OutputFormat, e: &Error) -> ! {
    let exit = exit_code(e);
    match format {
        OutputFormat::Json => {
            let envelope = ErrorEnvelope {
                error: ErrorBody {
                    code: e.code(),
                    message: e.to_string(),
                    exit_code: exit,
                },
            };
            println!("{}", serde_json::to_string(&envelope).expect("errors serialize"));
        }
        _ => eprintln!("error[{}]: {e}", e.code()),
    }
    std::process::exit(exit)
}

fn guard_magnitude(values: &[(&str, i64)]) -> Result<(), Error> {
    for (name, v) in values {
        if *v > INPUT_LIMIT || *v < -INPUT_LIMIT {
            return Err(Error::InvalidInput(format!(
                "--{name} = {v} exceeds the supported magnitude {INPUT_LIMIT}"
            )));
        }
    }
    Ok(())
}

fn guard_scale(command: &str, n: i64, limit: i64) -> Result<(), Error> {
    if n > limit {
        return Err(Error::InvalidInput(format!(
            "`{command}` supports n up to {limit}, got {n}"
        )));
    }
    Ok(())
}

fn run(command: &Command) -> Result<Rendering, Error> {
    match command {
        Command::Classify { n, q }
        | Command::Fill { n, q }
        | Command::LinkX { n, q }
        | Command::Resolve { n, q } => guard_magnitude(&[("n", *n), ("q", *q)])?,
        Command::Homeo { n, q, q2 } => {
            guard_magnitude(&[("n", *n), ("q", *q), ("q2", *q2)])?
        }
        Command::Cover { n, q, a, b } => {
            guard_magnitude(&[("n", *n), ("q", *q), ("a", *a), ("b", *b)])?
        }
        Command::Equiv { n, q, a, b, q2, n2, a2, b2 } => guard_magnitude(&[
            ("n", *n),
            ("q", *q),
            ("a", *a),
            ("b", *b),
            ("q2", *q2),
            ("n2", n2.unwrap_or(*n)),
            ("a2", a2.unwrap_or(*a)),
            ("b2", b2.unwrap_or(*b)),
        ])?,
        Command::Basis { n, q, bound } => {
            guard_magnitude(&[("n", *n), ("q", *q), ("bound", bound.unwrap_or(2 * *n))])?;
            guard_scale("basis", *n, BASIS_N_LIMIT)?;
            let effective = bound.unwrap_or(2 * *n);
            if *n >= 2 && effective > 4 * *n {
                return Err(Error::InvalidInput(format!(
                    "`basis` supports --bound up to 4n = {}, got {effective}",
                    4 * *n
                )));
            }
        }
        Command::Orbits { n, q } => {
            guard_magnitude(&[("n", *n), ("q", *q)])?;
            guard_scale("orbits", *n, ORBITS_N_LIMIT)?;
        }
        Command::VerifyChain { n, q } => {
            guard_magnitude(&[("n", *n), ("q", *q)])?;
            guard_scale("verify-chain", *n, VERIFY_N_LIMIT)?;
        }
        Command::Census { max_n } => guard_magnitude(&[("max-n", *max_n)])?,
    }

    match command {
        Command::Classify { n, q } => classify(*n, *q),
        Command::Homeo { n, q, q2 } => homeo(*n, *q, *q2),
        Command::Fill { n, q } => fill(*n, *q),
        Command::Cover { n, q, a, b } => cover(*n, *q, *a, *b),
        Command::Equiv { n, q, a, b, q2, n2, a2, b2 } => equiv(
            *n,
            *q,
            *a,
            *b,
            n2.unwrap_or(*n),
            *q2,
            a2.unwrap_or(*a),
            b2.unwrap_or(*b),
        ),
        Command::LinkX { n, q } => link_x(*n, *q),
        Command::Basis { n, q, bound } => basis(*n, *q, *bound),
        Command::Resolve { n, q } => resolve(*n, *q),
        Command::Orbits { n, q } => orbits(*n, *q),
        Command::VerifyChain { n, q } => verify_chain(*n, *q),
        Command::Census { max_n } => census(*max_n),
    }
}

#[derive(Serialize)]
struct PairInputs {
    n: i64,
    q: i64,
}

fn classify(n: i64, q: i64) -> Result<Rendering, Error> {
    #[derive(Serialize)]
    struct ClassifyResult {
        n: i64,
        q: i64,
        name: String,
        orientation_reversed: bool,
    }

    let lens = normalize_lens(n, q)?;
    let orientation_reversed = n < 0;
    let envelope = Envelope {
        command: "classify",
        inputs: PairInputs { n, q },
        result: ClassifyResult {
            n: lens.n(),
            q: lens.q(),
            name: lens.to_string(),
            orientation_reversed,
        },
    };

    let mut text = vec![lens.to_string(), format!("n = {}, q = {}", lens.n(), lens.q())];
    if orientation_reversed {
        text.push("warning: n < 0 was negated; the name refers to the reversed orientation".into());
    }
    Ok(Rendering { json: envelope.to_json(), text, dot: None })
}

fn homeo(n: i64, q: i64, q2: i64) -> Result<Rendering, Error> {
    #[derive(Serialize)]
    struct HomeoInputs {
        n: i64,
        q: i64,
        q2: i64,
    }

    let l1 = normalize_lens(n, q)?;
    let l2 = normalize_lens(n, q2)?;
    let verdict = is_homeomorphic(&l1, &l2);
    let envelope = Envelope {
        command: "homeo",
        inputs: HomeoInputs { n, q, q2 },
        result: verdict,
    };
    let text = vec![format!(
        "{l1} and {l2} are {}homeomorphic",
        if verdict { "" } else { "not " }
    )];
    Ok(Rendering { json: envelope.to_json(), text, dot: None })
}

fn fill(n: i64, q: i64) -> Result<Rendering, Error> {
    #[derive(Serialize)]
    struct FillResult {
        curve: CurveView,
        n: i64,
        q: i64,
        name: String,
    }

    let curve = TorusCurve::new(-q, n);
    let lens = dehn_fill(&curve)?;
    let envelope = Envelope {
        command: "fill",
        inputs: PairInputs { n, q },
        result: FillResult {
            curve: curve_view(&curve),
            n: lens.n(),
            q: lens.q(),
            name: lens.to_string(),
        },
    };
    let text = vec![format!("filling along {curve} gives {lens}")];
    Ok(Rendering { json: envelope.to_json(), text, dot: None })
}

#[derive(Serialize)]
struct CoverInputs {
    n: i64,
    q: i64,
    a: i64,
    b: i64,
}

fn cover(n: i64, q: i64, a: i64, b: i64) -> Result<Rendering, Error> {
    #[derive(Serialize)]
    struct CoverResult {
        matrix: [[i64; 2]; 2],
        generic_degree: i64,
        lens: LensView,
    }

    let data = CoveringData::new(n, q, a, b)?;
    let matrix = covering_matrix(&data);
    let envelope = Envelope {
        command: "cover",
        inputs: CoverInputs { n, q, a, b },
        result: CoverResult {
            matrix: matrix.entries(),
            generic_degree: generic_degree(&data),
            lens: lens_view(&data.lens()),
        },
    };
    let e = matrix.entries();
    let text = vec![
        format!("covering matrix of (n={n}, q={q}, a={a}, b={b}):"),
        format!("[ {:>3} {:>3} ]", e[0][0], e[0][1]),
        format!("[ {:>3} {:>3} ]", e[1][0], e[1][1]),
        format!("generic degree: {}", generic_degree(&data)),
        format!("link: {}", data.lens()),
    ];
    Ok(Rendering { json: envelope.to_json(), text, dot: None })
}

#[allow(clippy::too_many_arguments)]
fn equiv(
    n: i64,
    q: i64,
    a: i64,
    b: i64,
    n2: i64,
    q2: i64,
    a2: i64,
    b2: i64,
) -> Result<Rendering, Error> {
    #[derive(Serialize)]
    struct EquivInputs {
        n: i64,
        q: i64,
        a: i64,
        b: i64,
        n2: i64,
        q2: i64,
        a2: i64,
        b2: i64,
    }

    let d1 = CoveringData::new(n, q, a, b)?;
    let d2 = CoveringData::new(n2, q2, a2, b2)?;
    let verdict = covering_equivalent(&d1, &d2);
    let envelope = Envelope {
        command: "equiv",
        inputs: EquivInputs { n, q, a, b, n2, q2, a2, b2 },
        result: verdict,
    };
    let text = vec![format!(
        "covers ({n},{q},{a},{b}) and ({n2},{q2},{a2},{b2}) are {}equivalent",
        if verdict { "" } else { "not " }
    )];
    Ok(Rendering { json: envelope.to_json(), text, dot: None })
}

fn link_x(n: i64, q: i64) -> Result<Rendering, Error> {
    #[derive(Serialize)]
    struct LinkResult {
        lens: LensView,
        covering: CoveringView,
        trace: TraceView,
    }

    let link = link_of_x(n, q)?;
    let envelope = Envelope {
        command: "link-x",
        inputs: PairInputs { n, q },
        result: LinkResult {
            lens: lens_view(&link.lens),
            covering: covering_view(&link.covering),
            trace: trace_view(&link.trace),
        },
    };
    let t = &link.trace;
    let text = vec![
        format!("link of z^{n} = x*y^{}: {}", n - q, link.lens),
        format!("m2 . m1 = {}", t.m2_cap_m1),
        format!("m1 . l2 = {}", t.m1_cap_l2),
        format!("m1 = {}*l2 + {}*m2", t.alpha, t.beta),
        format!("reparametrize l2' = l2 + m2, so m1 = {n}*l2' - {q}*m2"),
        format!(
            "covering degrees on the two cores: a = {}, b = {}",
            link.covering.a(),
            link.covering.b()
        ),
    ];
    Ok(Rendering { json: envelope.to_json(), text, dot: None })
}

fn basis(n: i64, q: i64, bound: Option<i64>) -> Result<Rendering, Error> {
    #[derive(Serialize)]
    struct BasisInputs {
        n: i64,
        q: i64,
        bound: i64,
    }
    #[derive(Serialize)]
    struct BasisResult {
        n: i64,
        q: i64,
        generators: Vec<[i64; 2]>,
    }

    let germ = QuotientGerm::new(n, q)?;
    let bound = bound.unwrap_or(2 * n);
    let basis = hilbert_basis(&germ, bound)?;
    let generators: Vec<[i64; 2]> = basis.generators.iter().map(|m| [m.e1, m.e2]).collect();
    let envelope = Envelope {
        command: "basis",
        inputs: BasisInputs { n, q, bound },
        result: BasisResult { n, q, generators },
    };
    let mut text = vec![format!(
        "invariant semigroup of C({n},{q}): {} minimal generators",
        basis.generators.len()
    )];
    text.extend(basis.generators.iter().map(|m| m.to_string()));
    Ok(Rendering { json: envelope.to_json(), text, dot: None })
}

fn resolve(n: i64, q: i64) -> Result<Rendering, Error> {
    #[derive(Serialize)]
    struct ResolveResult {
        n: i64,
        q: i64,
        coefficients: Vec<i64>,
        value: String,
        dual_q: i64,
        dual_coefficients: Vec<i64>,
        self_intersections: Vec<i64>,
    }

    let chain = hj_expand(n, q)?;
    let dual = hj_reverse_dual(&chain);
    let graph = resolution_graph(&chain);
    let value = rational_string(&BigRational::new(BigInt::from(n), BigInt::from(q)));
    let envelope = Envelope {
        command: "resolve",
        inputs: PairInputs { n, q },
        result: ResolveResult {
            n,
            q,
            coefficients: chain.coefficients.clone(),
            value: value.clone(),
            dual_q: dual.q,
            dual_coefficients: dual.coefficients.clone(),
            self_intersections: graph.self_intersections.clone(),
        },
    };
    let text = vec![
        format!("{chain}"),
        format!("dual: {dual}"),
        format!(
            "resolution chain: {}",
            graph
                .self_intersections
                .iter()
                .map(|s| format!("({s})"))
                .collect::<Vec<_>>()
                .join("--")
        ),
    ];
    Ok(Rendering {
        json: envelope.to_json(),
        text,
        dot: Some(graph.to_dot()),
    })
}

fn orbits(n: i64, q: i64) -> Result<Rendering, Error> {
    #[derive(Serialize)]
    struct OrbitsResult {
        n: i64,
        q: i64,
        orbit_sizes: BTreeMap<i64, i64>,
        points: i64,
        free: bool,
    }

    let germ = QuotientGerm::new(n, q)?;
    let census = orbit_size_census(&germ);
    let points = n * n;
    let free = census.keys().all(|&size| size == n);
    let orbit_count: i64 = census.values().sum();
    let text = vec![format!(
        "{points} phase classes fall into {orbit_count} orbits of size {}{}",
        census.keys().map(|k| k.to_string()).collect::<Vec<_>>().join(", "),
        if free { " (free action)" } else { "" }
    )];
    let envelope = Envelope {
        command: "orbits",
        inputs: PairInputs { n, q },
        result: OrbitsResult { n, q, orbit_sizes: census, points, free },
    };
    Ok(Rendering { json: envelope.to_json(), text, dot: None })
}

fn verify_chain(n: i64, q: i64) -> Result<Rendering, Error> {
    #[derive(Serialize)]
    struct VerifyResult {
        n: i64,
        q: i64,
        points: usize,
        chain_identity: bool,
        orbit_invariance: bool,
    }

    let germ = QuotientGerm::new(n, q)?;
    let seed = 0x1e45_f04e ^ ((n as u64) << 16) ^ (q as u64);
    let points = sample_points(VERIFY_POINTS, seed);
    let chain_identity = points.iter().all(|p| chain_identity_check(&germ, p));
    let orbit_invariance = points.iter().all(|p| nu_orbit_invariance(&germ, p));
    let envelope = Envelope {
        command: "verify-chain",
        inputs: PairInputs { n, q },
        result: VerifyResult {
            n,
            q,
            points: VERIFY_POINTS,
            chain_identity,
            orbit_invariance,
        },
    };
    let text = vec![
        format!(
            "composed morphisms equal (z1^{n}, z2^{n}) on {VERIFY_POINTS} sample points: {}",
            if chain_identity { "yes" } else { "NO" }
        ),
        format!(
            "normalization constant on orbits: {}",
            if orbit_invariance { "yes" } else { "NO" }
        ),
    ];
    Ok(Rendering { json: envelope.to_json(), text, dot: None })
}

fn census(max_n: i64) -> Result<Rendering, Error> {
    #[derive(Serialize)]
    struct CensusInputs {
        max_n: i64,
    }
    #[derive(Serialize)]
    struct Row {
        n: i64,
        q: i64,
        name: String,
        q_dual: i64,
        basis_size: usize,
        hj_length: usize,
        normal: bool,
    }
    #[derive(Serialize)]
    struct CensusResult {
        rows: Vec<Row>,
    }

    if max_n < 2 {
        return Err(Error::InvalidInput(format!(
            "census requires max-n >= 2, got {max_n}"
        )));
    }
    if max_n > CENSUS_LIMIT {
        return Err(Error::BoundTooLarge { max_n, limit: CENSUS_LIMIT });
    }

    let mut rows = Vec::new();
    for n in 2..=max_n {
        for q in 1..n {
            let Ok(lens) = normalize_lens(n, q) else { continue };
            let germ = QuotientGerm::new(n, q)?;
            let basis = hilbert_basis(&germ, 2 * n)?;
            let chain = hj_expand(n, q)?;
            rows.push(Row {
                n,
                q,
                name: lens.to_string(),
                q_dual: mod_inverse(q, n)?,
                basis_size: basis.generators.len(),
                hj_length: chain.coefficients.len(),
                normal: q == n - 1,
            });
        }
    }

    let mut text = vec![
        format!("census of coprime (n, q) with n <= {max_n}:"),
        format!(
            "{:>4} {:>4} {:>10} {:>7} {:>11} {:>10} {:>7}",
            "n", "q", "name", "q_dual", "basis_size", "hj_length", "normal"
        ),
    ];
    for r in &rows {
        text.push(format!(
            "{:>4} {:>4} {:>10} {:>7} {:>11} {:>10} {:>7}",
            r.n, r.q, r.name, r.q_dual, r.basis_size, r.hj_length, r.normal
        ));
    }
    let envelope = Envelope {
        command: "census",
        inputs: CensusInputs { max_n },
        result: CensusResult { rows },
    };
    Ok(Rendering { json: envelope.to_json(), text, dot: None })
}
