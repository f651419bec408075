use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use algvar::algebra::{
    associativity_residuals, first_residual, is_associative, is_jordan, is_lie, jordan_part, lie_part, line_law,
    Algebra, LineLaw,
};
use algvar::classify::{
    canonical_algebra, classify, fingerprint, isomorphism_witness, jordan_classify2, lie_coefficients, ClassLabel,
    Witness,
};
use algvar::contraction::{contract, contraction_graph, search_families, transport, SearchOutcome, MAX_TEMPLATE_BOUND};
use algvar::deformation::{cohomology2, orbit_dim, perturbation_residual, stabilizer_dim};
use algvar::io::{
    algebra_to_json, family_to_json, nested_constants, parse_algebra, parse_family, parse_perturbation, pretty,
    trilinear_entries, witness_to_json,
};
use algvar::scalars::{Rational, Scalar};
use algvar::Error;

#[derive(Parser)]
#[command(name = "algvar", version, about = "Exact computations on two-dimensional associative algebras")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write the report to PATH instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlgebraInput {
    /// Algebra JSON file.
    #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
    file: Option<PathBuf>,

    /// Use a canonical law: abelian, beta1..beta7, jabelian, phi1..phi6.
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Isomorphism class, invariants, orbit dimension and witness.
    Classify(AlgebraInput),
    /// Jordan and Lie parts of a law.
    Decompose(AlgebraInput),
    /// Orbit and stabilizer dimensions.
    OrbitDim(AlgebraInput),
    /// Dimensions of 2-cocycles, 2-coboundaries and second cohomology.
    Cohomology(AlgebraInput),
    /// Residual of the perturbation equation for a perturbation file.
    Perturb { file: PathBuf },
    /// Limit of a law along a contraction family, or a bounded family search.
    Contract(ContractArgs),
    /// Contraction diagram of the two-dimensional classes as Graphviz DOT.
    Graph,
}

#[derive(Args)]
struct ContractArgs {
    /// Algebra file followed by family file; with --builtin only the family file.
    files: Vec<PathBuf>,

    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,

    /// Search the template families from SRC to DST.
    #[arg(long, num_args = 2, value_names = ["SRC", "DST"], conflicts_with_all = ["files", "builtin"])]
    search: Option<Vec<String>>,

    #[arg(long, default_value_t = 2, value_name = "N")]
    template_bound: u32,
}

enum Failure {
    Io(String),
    Lib(Error),
    /// Not associative, with a report already rendered.
    NotAssociative(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::NotAssociative(_) | Failure::Lib(Error::NotAssociative(_)) => 2,
            Failure::Lib(Error::PoleAtZero) => 3,
            _ => 1,
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn builtin(name: &str) -> Result<Algebra<Rational>, Failure> {
    Ok(canonical_algebra(name.parse::<ClassLabel>()?))
}

fn load(input: &AlgebraInput) -> Result<Algebra<Rational>, Failure> {
    match (&input.builtin, &input.file) {
        (Some(name), _) => builtin(name),
        (None, Some(path)) => Ok(parse_algebra(&read(path)?)?),
        (None, None) => Err(Failure::Io("no algebra given".into())),
    }
}

fn fmt_vec<S: Scalar>(v: &[S]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn fmt_law<S: Scalar>(alg: &Algebra<S>, indent: &str) -> String {
    let mut out = String::new();
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let _ = writeln!(out, "{indent}e{}*e{} = {}", i + 1, j + 1, fmt_vec(alg.basis_product(i, j)));
        }
    }
    out
}

/// Report for a law that fails associativity.
fn not_associative(alg: &Algebra<Rational>, json: bool) -> Failure {
    let residuals = associativity_residuals(alg);
    let first = first_residual(alg).expect("law is not associative");
    let text = if json {
        pretty(&json!({
            "associative": false,
            "first_residual": first,
            "residuals": trilinear_entries(&residuals),
        }))
    } else {
        let mut s = format!("not associative\nfirst nonzero residual at (i,j,k,l) = {first:?}\nresiduals:\n");
        for ([i, j, k, l], v) in residuals.nonzero_entries() {
            let _ =
                writeln!(s, "  ((e{}e{})e{} - e{}(e{}e{}))_{} = {v}", i + 1, j + 1, k + 1, i + 1, j + 1, k + 1, l + 1);
        }
        s
    };
    Failure::NotAssociative(text)
}

fn require_associative(alg: &Algebra<Rational>, json: bool) -> Result<(), Failure> {
    if is_associative(alg) {
        Ok(())
    } else {
        Err(not_associative(alg, json))
    }
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Rational(g) => format!("{:?}", g.matrix()),
        Witness::Quadratic { radicand, map } => format!("{:?} over Q(sqrt({radicand}))", map.matrix()),
    }
}

fn cmd_classify(input: &AlgebraInput, json: bool) -> Outcome {
    let alg = load(input)?;
    require_associative(&alg, json)?;
    let dim = orbit_dim(&alg)?;
    if alg.dim() != 2 {
        let line = (alg.dim() == 1).then(|| line_law(&alg)).transpose()?;
        let line_name = line.map(|l| match l {
            LineLaw::Zero => "zero",
            LineLaw::Idempotent { .. } => "idempotent line",
        });
        return Ok(if json {
            pretty(&json!({ "dim": alg.dim(), "associative": true, "orbit_dim": dim, "line_law": line_name }))
        } else {
            let mut s = format!("dim: {}\nassociative: true\norbit_dim: {dim}\n", alg.dim());
            if let Some(name) = line_name {
                let _ = writeln!(s, "line law: {name}");
            }
            s
        });
    }
    let fp = fingerprint(&alg)?;
    let (label, witness) = isomorphism_witness(&alg)?;
    Ok(if json {
        pretty(&json!({
            "label": label,
            "fingerprint": fp,
            "orbit_dim": dim,
            "witness": witness_to_json(&witness),
        }))
    } else {
        let fp_value = serde_json::to_value(&fp).expect("serializable");
        let mut s = format!("label: {label}\norbit_dim: {dim}\nfingerprint:\n");
        for (k, v) in fp_value.as_object().expect("struct") {
            let _ = writeln!(s, "  {k}: {v}");
        }
        let _ = writeln!(s, "witness (columns are the new basis): {}", witness_text(&witness));
        s
    })
}

fn cmd_decompose(input: &AlgebraInput, json: bool) -> Outcome {
    let alg = load(input)?;
    let (phi, mu) = (jordan_part(&alg), lie_part(&alg));
    let jordan_ok = is_jordan(&phi)?;
    let lie_ok = is_lie(&mu)?;
    let jordan_class = if alg.dim() == 2 && jordan_ok { Some(jordan_classify2(&phi)?) } else { None };
    let coeffs = if alg.dim() == 2 { Some(lie_coefficients(&alg)?) } else { None };
    Ok(if json {
        pretty(&json!({
            "associative": is_associative(&alg),
            "jordan_part": algebra_to_json(&phi, "rational"),
            "lie_part": algebra_to_json(&mu, "rational"),
            "is_jordan": jordan_ok,
            "is_lie": lie_ok,
            "jordan_class": jordan_class,
            "lie_coefficients": coeffs,
        }))
    } else {
        let mut s = format!("associative: {}\njordan part:\n{}", is_associative(&alg), fmt_law(&phi, "  "));
        let _ = write!(s, "lie part:\n{}", fmt_law(&mu, "  "));
        let _ = writeln!(s, "jordan identity: {jordan_ok}\njacobi identity: {lie_ok}");
        if let Some(c) = jordan_class {
            let _ = writeln!(s, "jordan class: {c}");
        }
        if let Some(c) = coeffs {
            let _ = writeln!(s, "lie coefficients: a = {}, b = {}", c.a, c.b);
        }
        s
    })
}

fn cmd_orbit_dim(input: &AlgebraInput, json: bool) -> Outcome {
    let alg = load(input)?;
    require_associative(&alg, json)?;
    let (o, s) = (orbit_dim(&alg)?, stabilizer_dim(&alg)?);
    Ok(if json {
        pretty(&json!({ "orbit_dim": o, "stabilizer_dim": s }))
    } else {
        format!("orbit_dim: {o}\nstabilizer_dim: {s}\n")
    })
}

fn cmd_cohomology(input: &AlgebraInput, json: bool) -> Outcome {
    let alg = load(input)?;
    require_associative(&alg, json)?;
    let h = cohomology2(&alg)?;
    Ok(if json {
        pretty(&serde_json::to_value(h).expect("serializable"))
    } else {
        format!("z2_dim: {}\nb2_dim: {}\nh2_dim: {}\n", h.z2_dim, h.b2_dim, h.h2_dim)
    })
}

fn cmd_perturb(file: &PathBuf, json: bool) -> Outcome {
    let p = parse_perturbation(&read(file)?)?;
    require_associative(p.base(), json)?;
    let residual = perturbation_residual(&p)?;
    let zero = residual.is_zero();
    Ok(if json {
        pretty(&json!({ "identically_associative": zero, "residual": trilinear_entries(&residual) }))
    } else if zero {
        "identically associative\n".to_string()
    } else {
        let mut s = String::from("residual (i, j, k, l): value\n");
        for ([i, j, k, l], v) in residual.nonzero_entries() {
            let _ = writeln!(s, "  ({}, {}, {}, {}): {v}", i + 1, j + 1, k + 1, l + 1);
        }
        s
    })
}

fn cmd_search(names: &[String], bound: u32, json: bool) -> Outcome {
    if bound > MAX_TEMPLATE_BOUND {
        return Err(Failure::Lib(Error::Parse(format!("template bound must be at most {MAX_TEMPLATE_BOUND}"))));
    }
    let src: ClassLabel = names[0].parse()?;
    let dst: ClassLabel = names[1].parse()?;
    if !ClassLabel::ASSOCIATIVE.contains(&src) || !ClassLabel::ASSOCIATIVE.contains(&dst) {
        return Err(Failure::Lib(Error::Parse("search needs associative class labels".into())));
    }
    let outcome = search_families(src, dst, bound);
    let census = serde_json::to_value(outcome.census()).expect("serializable");
    Ok(match (&outcome, json) {
        (SearchOutcome::Found { template, family, .. }, true) => pretty(&json!({
            "found": true, "template": template, "family": family_to_json(family), "census": census,
        })),
        (SearchOutcome::NotFound { .. }, true) => pretty(&json!({ "found": false, "census": census })),
        (SearchOutcome::Found { template, family, .. }, false) => format!(
            "found: g[{}] * diag(t^{}, t^{}) * h[{}]\nfamily: {:?}\ncensus: {census}\n",
            template.g,
            template.a,
            template.b,
            template.h,
            family.matrix()
        ),
        (SearchOutcome::NotFound { .. }, false) => format!("not found\ncensus: {census}\n"),
    })
}

fn cmd_contract(args: &ContractArgs, json: bool) -> Outcome {
    if let Some(names) = &args.search {
        return cmd_search(names, args.template_bound, json);
    }
    let (alg, family_path) = match (&args.builtin, args.files.as_slice()) {
        (Some(name), [fam]) => (builtin(name)?, fam),
        (None, [alg, fam]) => (parse_algebra(&read(alg)?)?, fam),
        _ => return Err(Failure::Io("expected an algebra and a family file".into())),
    };
    let family = parse_family(&read(family_path)?)?;
    require_associative(&alg, json)?;
    let moving = transport(&alg, &family)?;
    let limit = contract(&alg, &family)?;
    let (src_dim, lim_dim) = (orbit_dim(&alg)?, orbit_dim(&limit)?);
    let label = if alg.dim() == 2 { Some(classify(&limit)?) } else { None };
    Ok(if json {
        pretty(&json!({
            "transported": nested_constants(&moving),
            "limit": algebra_to_json(&limit, "rational"),
            "label": label,
            "source_orbit_dim": src_dim,
            "limit_orbit_dim": lim_dim,
            "dimension_drop": src_dim > lim_dim,
        }))
    } else {
        let mut s = format!("transported law:\n{}limit:\n{}", fmt_law(&moving, "  "), fmt_law(&limit, "  "));
        if let Some(l) = label {
            let _ = writeln!(s, "label: {l}");
        }
        let _ = writeln!(s, "orbit_dim: {src_dim} -> {lim_dim} (strict drop: {})", src_dim > lim_dim);
        s
    })
}

fn cmd_graph(json: bool) -> Outcome {
    let graph = contraction_graph();
    Ok(if json {
        let edges: Vec<Value> = graph.edge_set().iter().map(|(s, t)| json!([s, t])).collect();
        pretty(&json!({ "nodes": graph.nodes, "edges": edges }))
    } else {
        graph.to_dot()
    })
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Classify(input) => cmd_classify(input, cli.json),
        Command::Decompose(input) => cmd_decompose(input, cli.json),
        Command::OrbitDim(input) => cmd_orbit_dim(input, cli.json),
        Command::Cohomology(input) => cmd_cohomology(input, cli.json),
        Command::Perturb { file } => cmd_perturb(file, cli.json),
        Command::Contract(args) => cmd_contract(args, cli.json),
        Command::Graph => cmd_graph(cli.json),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    // Exit code 2 is reserved for non-associative input, so usage errors
    // report as 1 instead of clap's default.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(text) => match emit(&cli, &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(failure) => {
            let code = failure.exit_code();
            match failure {
                Failure::NotAssociative(report) => {
                    if let Err(e) = emit(&cli, &report) {
                        eprintln!("error: {e}");
                    }
                    eprintln!("error: law is not associative");
                }
                Failure::Io(msg) => eprintln!("error: {msg}"),
                Failure::Lib(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(code)
        }
    }
}
