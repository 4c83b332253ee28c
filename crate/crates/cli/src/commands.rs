//! Subcommands and their reports.

use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand};
use hypertoric::arrangement::{chambers_from_poly, crepant_resolution_count, Arrangement, CharPoly};
use hypertoric::classify::{self, ClassifyError, DEFAULT_WITNESS_BUDGET};
use hypertoric::hypertoric::{HypertoricDatum, RingWarning};
use hypertoric::linalg::{is_surjective_over_z, is_unimodular, rank};
use hypertoric::ClassLabel;
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::chi::{self, FieldResult, Method};
use crate::error::CliError;
use crate::input::{format_matrix, vector_value, GraphFile, MatrixFile};
use crate::report::{int_value, list, matrix_value, one_based, Report};
use crate::selfcheck;

#[derive(Debug, Parser)]
#[command(name = "hypertoric", version, about = "Invariants of affine hypertoric varieties from integer matrices")]
pub struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for finite-field point counts.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: u16,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    /// Matrix file (`-` for standard input).
    pub matrix: String,
    /// Read the file as the Gale dual `B` instead of `A`.
    #[arg(long)]
    pub gale: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check surjectivity over Z and unimodularity.
    Validate(MatrixArgs),
    /// Print the Gale dual B as a matrix file.
    Gale(MatrixArgs),
    /// Dimension, reduced expression, Namikawa-Weyl group, slices and strata.
    #[command(group(ArgGroup::new("source").required(true).args(["matrix", "graph"])))]
    Info {
        matrix: Option<String>,
        /// Quiver variety of a connected graph file.
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, requires = "matrix")]
        gale: bool,
    },
    /// Generators of the invariant ring up to a degree bound.
    RingGens {
        #[command(flatten)]
        input: MatrixArgs,
        /// Largest generator degree searched (default 2 max l + 2).
        #[arg(long)]
        degree_bound: Option<usize>,
    },
    /// Characteristic polynomial of the arrangement of a matrix's columns.
    #[command(group(ArgGroup::new("source").required(true).args(["matrix", "er"])))]
    Chi {
        matrix: Option<String>,
        /// Edelman-Reiner arrangement A_{l1,l2,l3}.
        #[arg(long, num_args = 3, value_names = ["L1", "L2", "L3"])]
        er: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Count points over this prime (finite-field method only).
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Number of crepant resolutions, r(H_A) / |W_B|.
    Resolutions(MatrixArgs),
    /// Decide whether two data give isomorphic varieties.
    Iso {
        first: String,
        second: String,
        #[arg(long)]
        gale_first: bool,
        #[arg(long)]
        gale_second: bool,
        /// Also find P in GL_d(Z) and a signed permutation D with A' = P A D.
        #[arg(long)]
        witness: bool,
        /// Candidate limit for the witness search.
        #[arg(long, default_value_t = DEFAULT_WITNESS_BUDGET)]
        budget: u128,
    },
    /// Name the isomorphism class (complete in dimensions 4 and 6).
    Classify(MatrixArgs),
    /// Decide whether two graphs give isomorphic quiver varieties.
    QuiverIso { first: String, second: String },
    /// Test for a product of minimal nilpotent orbit closures of type A.
    NilpotentTest(MatrixArgs),
    /// Randomized consistency checks driven by --seed.
    Selfcheck {
        /// Cases per check.
        #[arg(long, default_value_t = 40)]
        cases: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::Gale(_) => "gale",
            Command::Info { .. } => "info",
            Command::RingGens { .. } => "ring-gens",
            Command::Chi { .. } => "chi",
            Command::Resolutions(_) => "resolutions",
            Command::Iso { .. } => "iso",
            Command::Classify(_) => "classify",
            Command::QuiverIso { .. } => "quiver-iso",
            Command::NilpotentTest(_) => "nilpotent-test",
            Command::Selfcheck { .. } => "selfcheck",
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Validate(m) => validate(m)?,
        Command::Gale(m) => gale(m)?,
        Command::Info { matrix, graph, gale } => info(matrix.as_deref(), graph.as_deref(), *gale)?,
        Command::RingGens { input, degree_bound } => ring_gens(input, *degree_bound)?,
        Command::Chi {
            matrix,
            er,
            method,
            prime,
        } => chi_command(matrix.as_deref(), er.as_deref(), *method, *prime, usize::from(cli.threads))?,
        Command::Resolutions(m) => resolutions(m)?,
        Command::Iso {
            first,
            second,
            gale_first,
            gale_second,
            witness,
            budget,
        } => iso((first, *gale_first), (second, *gale_second), *witness, *budget)?,
        Command::Classify(m) => classify_command(m)?,
        Command::QuiverIso { first, second } => quiver_iso(first, second)?,
        Command::NilpotentTest(m) => nilpotent_test(m)?,
        Command::Selfcheck { cases } => selfcheck::run(cli.seed, *cases)?,
    };
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn load_datum(path: &str, gale: bool) -> Result<(MatrixFile, HypertoricDatum), CliError> {
    let file = MatrixFile::read(path)?;
    let datum = if gale {
        HypertoricDatum::from_matrix_b(&file.matrix)
    } else {
        HypertoricDatum::from_matrix_a(&file.matrix)
    }
    .map_err(|e| CliError::from(e).context(path))?;
    Ok((file, datum))
}

fn matrix_echo(file: &MatrixFile, gale: bool) -> Value {
    let mut echo = file.echo();
    echo["side"] = json!(if gale { "B" } else { "A" });
    echo
}

fn validate(args: &MatrixArgs) -> Result<Report, CliError> {
    let file = MatrixFile::read(&args.matrix)?;
    let m = &file.matrix;
    let mut report = Report::new("validate", matrix_echo(&file, args.gale));
    if args.gale {
        let full_rank = rank(m) == m.cols();
        let free = is_surjective_over_z(&m.transpose());
        let unimodular = full_rank && is_unimodular(&m.transpose())?;
        report.line("full column rank", yes_no(full_rank));
        report.line("cokernel free", yes_no(free));
        report.line("unimodular", yes_no(unimodular));
        report.result = json!({
            "full_column_rank": full_rank,
            "cokernel_free": free,
            "unimodular": unimodular,
        });
    } else {
        let r = rank(m);
        let surjective = is_surjective_over_z(m);
        let unimodular = r == m.rows() && is_unimodular(m)?;
        report.line("surjective", yes_no(surjective));
        report.line("rank", format!("{r} of {}", m.rows()));
        report.line("unimodular", yes_no(unimodular));
        report.result = json!({
            "surjective": surjective,
            "rank": r,
            "unimodular": unimodular,
        });
    }
    Ok(report)
}

fn gale(args: &MatrixArgs) -> Result<Report, CliError> {
    let (file, datum) = load_datum(&args.matrix, args.gale)?;
    let out = if args.gale { datum.original_a() } else { datum.original_b() };
    let mut report = Report::new("gale", matrix_echo(&file, args.gale));
    report.raw(&format_matrix(out));
    report.result = json!({
        "side": if args.gale { "A" } else { "B" },
        "rows": out.rows(),
        "cols": out.cols(),
        "matrix": matrix_value(out),
    });
    Ok(report)
}

fn weyl_type(mults: &[usize]) -> String {
    let factors: Vec<String> = mults.iter().map(|l| format!("S{l}")).collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join(" x ")
    }
}

fn info(matrix: Option<&str>, graph: Option<&str>, gale: bool) -> Result<Report, CliError> {
    let (echo, datum) = match (matrix, graph) {
        (Some(path), _) => {
            let (file, datum) = load_datum(path, gale)?;
            (matrix_echo(&file, gale), datum)
        }
        (None, Some(path)) => {
            let file = GraphFile::read(path)?;
            let datum = HypertoricDatum::from_graph(&file.graph).map_err(|e| CliError::from(e).context(path))?;
            (file.echo(), datum)
        }
        (None, None) => return Err(CliError::usage("info needs a matrix file or --graph")),
    };
    let mut report = Report::new("info", echo);
    let kept = datum.kept_rows();
    let original = |reduced: &[usize]| -> Vec<usize> { reduced.iter().map(|&i| kept[i] + 1).collect() };

    report.line("n", datum.original_a().cols());
    report.line("d", datum.original_a().rows());
    report.line("dimension", datum.dimension());
    report.line("reduced n", datum.n());
    report.line("reduced d", datum.d());
    let dropped = one_based(datum.dropped_rows());
    report.line(
        "dropped coordinates",
        if dropped.is_empty() { "none".into() } else { list(&dropped) },
    );

    let mut classes = Vec::new();
    report.line("parallel classes", datum.reduced_expression().len());
    for (k, c) in datum.reduced_expression().iter().enumerate() {
        let members = original(&c.members);
        let dir: Vec<String> = c.direction.iter().map(ToString::to_string).collect();
        let signs: String = c.signs.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect();
        report.raw(&format!(
            "  class {}: l = {}, coordinates {}, signs {signs}, direction ({})\n",
            k + 1,
            c.multiplicity(),
            list(&members),
            dir.join(", ")
        ));
        classes.push(json!({
            "multiplicity": c.multiplicity(),
            "coordinates": members,
            "signs": c.signs,
            "direction": vector_value(&c.direction),
        }));
    }

    let w = datum.namikawa_weyl();
    report.line("W_B", format!("{}, order {}", weyl_type(&w.multiplicities), w.order));

    let slices = datum.codim2_slices();
    let mut slice_docs = Vec::new();
    report.line("codim-2 slices", slices.len());
    for s in &slices {
        report.raw(&format!(
            "  class {}: A{} on {}\n",
            s.class_index + 1,
            s.slice_type(),
            list(&original(&s.flat))
        ));
        slice_docs.push(json!({
            "class": s.class_index + 1,
            "type": format!("A{}", s.slice_type()),
            "coordinates": original(&s.flat),
        }));
    }

    let strata = datum.flats()?;
    let mut strata_docs = Vec::new();
    report.line("strata", strata.len());
    for f in &strata {
        report.raw(&format!(
            "  flat {}: rank {}, stratum dim {}, slice dim {}\n",
            list(&original(&f.flat)),
            f.rank,
            f.stratum_dim,
            f.slice.dimension()
        ));
        strata_docs.push(json!({
            "flat": original(&f.flat),
            "rank": f.rank,
            "stratum_dim": f.stratum_dim,
            "slice_dim": f.slice.dimension(),
        }));
    }

    report.result = json!({
        "n": datum.original_a().cols(),
        "d": datum.original_a().rows(),
        "dimension": datum.dimension(),
        "reduced": {
            "n": datum.n(),
            "d": datum.d(),
            "dropped": dropped,
            "classes": classes,
        },
        "weyl": {
            "type": weyl_type(&w.multiplicities),
            "multiplicities": w.multiplicities,
            "order": int_value(&w.order),
        },
        "codim2_slices": slice_docs,
        "strata": strata_docs,
    });
    Ok(report)
}

fn ring_warning(w: &RingWarning) -> String {
    match w {
        RingWarning::BoundTooSmall { bound } => {
            format!("no f_beta generator has degree at most {bound}; raise --degree-bound")
        }
        RingWarning::BoundaryIrreducible { bound, count } => format!(
            "{count} irreducible elements have degree exactly {bound}; generators of higher degree may be missing"
        ),
    }
}

fn ring_gens(args: &MatrixArgs, bound: Option<usize>) -> Result<Report, CliError> {
    let (file, datum) = load_datum(&args.matrix, args.gale)?;
    let bound = bound.unwrap_or_else(|| datum.default_degree_bound());
    let gens = datum.ring_generators(bound)?;
    let mut echo = matrix_echo(&file, args.gale);
    echo["degree_bound"] = json!(bound);
    let mut report = Report::new("ring-gens", echo);
    report.line("degree bound", gens.bound);
    report.line("generators", gens.generators.len());
    let mut docs = Vec::new();
    for g in &gens.generators {
        report.raw(&format!("  {g} (degree {})\n", g.degree()));
        docs.push(json!({
            "monomial": g.to_string(),
            "degree": g.degree(),
            "z": g.z,
            "w": g.w,
        }));
    }
    for w in &gens.warnings {
        report.warn(ring_warning(w));
    }
    report.result = json!({ "bound": gens.bound, "generators": docs });
    Ok(report)
}

fn poly_doc(chi: &CharPoly, dim: usize) -> (Vec<BigInt>, BigInt) {
    let desc: Vec<BigInt> = chi.coefficients().iter().rev().cloned().collect();
    (desc, chambers_from_poly(chi, dim))
}

fn chi_command(
    matrix: Option<&str>,
    er: Option<&[usize]>,
    method: Method,
    prime: Option<u64>,
    threads: usize,
) -> Result<Report, CliError> {
    if prime.is_some() && method != Method::Ffield {
        return Err(CliError::usage("--prime needs --method ffield"));
    }
    let (mut echo, arr) = match (matrix, er) {
        (Some(path), _) => {
            let file = MatrixFile::read(path)?;
            let arr = Arrangement::from_columns(&file.matrix).map_err(|e| CliError::from(e).context(path))?;
            (file.echo(), arr)
        }
        (None, Some(&[l1, l2, l3])) => {
            if l1 == 0 || l2 == 0 || l3 == 0 {
                return Err(CliError::usage("--er multiplicities must be positive"));
            }
            (json!({ "er": [l1, l2, l3] }), Arrangement::edelman_reiner(l1, l2, l3))
        }
        _ => return Err(CliError::usage("chi needs a matrix file or --er L1 L2 L3")),
    };
    echo["method"] = json!(method.name());
    if let Some(p) = prime {
        echo["prime"] = json!(p);
    }
    let mut report = Report::new("chi", echo);
    report.line("arrangement", format!("{} hyperplanes in dimension {}", arr.len(), arr.dim()));
    report.line("method", method.name());
    let mut result = json!({
        "dim": arr.dim(),
        "hyperplanes": arr.len(),
        "method": method.name(),
    });
    let chi = match method {
        Method::Ffield => match chi::finite_field(&arr, prime, threads)? {
            FieldResult::Single {
                prime,
                count,
                hadamard_bound,
                prime_too_small,
            } => {
                report.line("prime", prime);
                report.line("minor bound", &hadamard_bound);
                report.line("complement points", &count);
                if prime_too_small {
                    report.warn(format!(
                        "prime {prime} does not exceed the minor bound {hadamard_bound}; the count may differ from chi({prime})"
                    ));
                }
                result["prime"] = json!(prime);
                result["minor_bound"] = int_value(&hadamard_bound);
                result["count"] = int_value(&count);
                result["prime_too_small"] = json!(prime_too_small);
                None
            }
            FieldResult::Interpolated { primes, chi } => {
                let ps: Vec<String> = primes.iter().map(ToString::to_string).collect();
                report.line("primes", ps.join(" "));
                result["primes"] = json!(primes);
                Some(chi)
            }
        },
        m => Some(chi::exact(&arr, m)?),
    };
    if let Some(chi) = chi {
        let (desc, chambers) = poly_doc(&chi, arr.dim());
        let coeffs: Vec<String> = desc.iter().map(ToString::to_string).collect();
        report.line("chi", &chi);
        report.line("coefficients", coeffs.join(" "));
        report.line("chambers", &chambers);
        result["polynomial"] = json!(chi.to_string());
        result["coefficients"] = Value::Array(desc.iter().map(int_value).collect());
        result["chambers"] = int_value(&chambers);
    }
    report.result = result;
    Ok(report)
}

fn resolutions(args: &MatrixArgs) -> Result<Report, CliError> {
    let (file, datum) = load_datum(&args.matrix, args.gale)?;
    let r = crepant_resolution_count(&datum)?;
    let mut report = Report::new("resolutions", matrix_echo(&file, args.gale));
    report.line("r(H_A)", &r.chambers);
    report.line("|W_B|", &r.weyl_order);
    report.line("resolutions", &r.count);
    report.result = json!({
        "chambers": int_value(&r.chambers),
        "weyl_order": int_value(&r.weyl_order),
        "count": int_value(&r.count),
    });
    Ok(report)
}

fn iso(first: (&str, bool), second: (&str, bool), witness: bool, budget: u128) -> Result<Report, CliError> {
    let (f1, h1) = load_datum(first.0, first.1)?;
    let (f2, h2) = load_datum(second.0, second.1)?;
    let mut echo = json!({
        "first": matrix_echo(&f1, first.1),
        "second": matrix_echo(&f2, second.1),
    });
    if witness {
        echo["budget"] = int_value(&BigInt::from(budget));
    }
    let mut report = Report::new("iso", echo);
    let sigma = classify::isomorphic_data(&h1, &h2)?;
    report.line("isomorphic", yes_no(sigma.is_some()));
    let mut result = json!({ "isomorphic": sigma.is_some() });
    if let Some(s) = &sigma {
        let (k1, k2) = (h1.kept_rows(), h2.kept_rows());
        let pairs: Vec<(usize, usize)> = s.map.iter().enumerate().map(|(i, &j)| (k1[i] + 1, k2[j] + 1)).collect();
        let shown: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}->{b}")).collect();
        report.line("bijection", shown.join(" "));
        result["bijection"] = json!(pairs);
    }
    if witness {
        result["witness"] = Value::Null;
        match classify::equivalence_witness(h1.a(), h2.a(), budget) {
            Ok(Some(w)) => {
                if !w.verify(h1.a(), h2.a()) {
                    return Err(CliError::violation("witness failed verification"));
                }
                report.raw(&format!("P:\n{}", format_matrix(&w.p)));
                report.raw(&format!("D:\n{}", format_matrix(&w.d)));
                result["witness"] = json!({ "P": matrix_value(&w.p), "D": matrix_value(&w.d) });
            }
            Ok(None) if sigma.is_some() => {
                return Err(CliError::violation(
                    "matroids are isomorphic but no matrix equivalence exists",
                ));
            }
            Ok(None) => report.line("witness", "none"),
            Err(e @ ClassifyError::BudgetExceeded { .. }) => {
                report.line("witness", "budget exhausted");
                report.warn(e.to_string());
                report.exit_code = CliError::from(e).exit_code();
            }
            Err(e) => return Err(e.into()),
        }
    }
    report.result = result;
    Ok(report)
}

fn label_doc(label: &ClassLabel) -> Value {
    let mut doc = match label {
        ClassLabel::SurfaceProduct { l1, l2 } => json!({ "kind": "SurfaceProduct", "multiplicities": [l1, l2] }),
        ClassLabel::OminTriple { l1, l2, l3 } => json!({ "kind": "OminTriple", "multiplicities": [l1, l2, l3] }),
        ClassLabel::Catalog6 { index, multiplicities } => {
            json!({ "kind": "Catalog6", "index": index, "multiplicities": multiplicities })
        }
        ClassLabel::Other { fingerprint } => json!({ "kind": "Other", "fingerprint": fingerprint }),
    };
    doc["label"] = json!(label.to_string());
    doc
}

fn classify_command(args: &MatrixArgs) -> Result<Report, CliError> {
    let (file, datum) = load_datum(&args.matrix, args.gale)?;
    let label = classify::classify(&datum)?;
    let mut report = Report::new("classify", matrix_echo(&file, args.gale));
    report.line("dimension", datum.dimension());
    report.line("class", &label);
    if matches!(label, ClassLabel::Other { .. }) {
        report.warn("no catalog for this dimension; the label is a matroid fingerprint");
    }
    let mut result = label_doc(&label);
    result["dimension"] = json!(datum.dimension());
    report.result = result;
    Ok(report)
}

fn quiver_iso(first: &str, second: &str) -> Result<Report, CliError> {
    let g1 = GraphFile::read(first)?;
    let g2 = GraphFile::read(second)?;
    let mut report = Report::new("quiver-iso", json!({ "first": g1.echo(), "second": g2.echo() }));
    let iso = classify::quiver_iso(&g1.graph, &g2.graph)?;
    report.line("isomorphic", yes_no(iso));
    report.result = json!({ "isomorphic": iso });
    Ok(report)
}

fn nilpotent_test(args: &MatrixArgs) -> Result<Report, CliError> {
    let (file, datum) = load_datum(&args.matrix, args.gale)?;
    let found = datum.degree_two_test()?;
    let mut report = Report::new("nilpotent-test", matrix_echo(&file, args.gale));
    match &found {
        Some(ls) => report.line("result", list(ls)),
        None => report.line("result", "absent"),
    }
    report.result = json!({ "product_of_orbits": found.is_some(), "multiset": found });
    Ok(report)
}
