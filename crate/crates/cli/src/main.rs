//! Command-line front end: adjacency decisions, Schubert schemes, Hilbert
//! numerators, partition graphs and the flip calculus.

mod output;
mod parse;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use idealgraph::edges::{
    diagnostics, edge_scheme_with_path, verify_edge_point, EdgeStatus, PathMode,
};
use idealgraph::error::Error as CoreError;
use idealgraph::field::Field;
use idealgraph::hilbert::hilbert_numerator;
use idealgraph::monomial::var_names;
use idealgraph::partitions::{edge_set_difference, partition_graph};
use idealgraph::schubert::{omega_pair, schubert_scheme};
use idealgraph::simplicial::{all_flip_neighbors, face_vertices, flip, stanley_reisner};

use output::{
    diagnostics_text, diagnostics_value, direction_value, facet_list_text, facets_value, graph_dot,
    poly_value, record, Format,
};
use parse::{
    parse_complex, parse_direction, parse_face, parse_field, parse_ideal, parse_ideals,
    parse_point, parse_selection, ParseError,
};

#[derive(Parser)]
#[command(
    name = "idealgraph",
    version,
    about = "Vertices and edges in the graph of monomial ideals, with exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Coefficient field: Q or Fp:P for a prime P
    #[arg(long, global = true, default_value = "Q")]
    field: String,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,

    /// Number of variables (inferred from the input when omitted)
    #[arg(long, global = true)]
    nvars: Option<usize>,

    /// Largest colength accepted by partition-graph
    #[arg(long = "budget-r", global = true, default_value_t = 10)]
    budget_r: u32,

    /// Largest number of λ-variables accepted in scheme constructions
    #[arg(long = "budget-lambda", global = true, default_value_t = 64)]
    budget_lambda: usize,

    /// Force the direction-discovery route
    #[arg(long = "force-path", global = true, value_enum)]
    force_path: Option<PathArg>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum FormatArg {
    Human,
    JsonLines,
    Dot,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum PathArg {
    Pvector,
    Binomial,
}

#[derive(Subcommand)]
enum Command {
    /// Numerator of the ℕⁿ-graded Hilbert series of K\[x\]/M
    Hilbert {
        /// Monomial ideal, e.g. "x^6, x^2*y, y^2"
        ideal: String,
    },
    /// Decide adjacency of two monomial ideals and print the edge scheme
    Edge { m1: String, m2: String },
    /// The Schubert scheme of M in a direction c
    Omega {
        ideal: String,
        /// Direction, e.g. "(1,-1)"
        #[arg(long)]
        direction: String,
    },
    /// The graph of partitions of r
    PartitionGraph {
        r: u32,
        /// Also compute over GF(2) and GF(3) and report edge-set differences
        #[arg(long)]
        sweep: bool,
    },
    /// Apply a generalized bistellar flip
    Flip {
        /// Facet list, e.g. "123,124" or "{1,2,3},{1,2,4}"
        complex: String,
        /// The face a = supp(c⁺)
        #[arg(long)]
        a: String,
        /// The vertex set b = supp(c⁻)
        #[arg(long)]
        b: String,
        /// Component selection, 1-based, e.g. "1" or "1,2"
        #[arg(long, default_value = "1")]
        select: String,
    },
    /// List all square-free flip neighbors of a complex
    Neighbors { complex: String },
    /// The Stanley–Reisner ideal of a complex
    SrIdeal { complex: String },
    /// Check that a scheme point yields the prescribed initial ideals
    VerifyPoint {
        m1: String,
        m2: String,
        #[arg(long)]
        direction: String,
        /// Assignment such as "a1=1,b1=1"; omitted variables are 0
        #[arg(long)]
        point: String,
    },
}

struct CliError {
    code: i32,
    message: String,
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError {
            code: 2,
            message: e.to_string(),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::BudgetExceeded(_) => 3,
            _ => 4,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn budget_error(message: String) -> CliError {
    CliError { code: 3, message }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {}", e.message);
        std::process::exit(e.code);
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let field = parse_field(&cli.field)?;
    let format = match cli.format {
        FormatArg::Human => Format::Human,
        FormatArg::JsonLines => Format::JsonLines,
        FormatArg::Dot => Format::Dot,
    };
    let path_mode = match cli.force_path {
        None => PathMode::Auto,
        Some(PathArg::Pvector) => PathMode::PVector,
        Some(PathArg::Binomial) => PathMode::Binomial,
    };
    match &cli.command {
        Command::Hilbert { ideal } => cmd_hilbert(ideal, cli.nvars, format),
        Command::Edge { m1, m2 } => cmd_edge(
            m1,
            m2,
            cli.nvars,
            &field,
            path_mode,
            cli.budget_lambda,
            format,
        ),
        Command::Omega { ideal, direction } => cmd_omega(
            ideal,
            direction,
            cli.nvars,
            &field,
            cli.budget_lambda,
            format,
        ),
        Command::PartitionGraph { r, sweep } => {
            cmd_partition_graph(*r, *sweep, &field, cli.budget_r, format)
        }
        Command::Flip {
            complex,
            a,
            b,
            select,
        } => cmd_flip(complex, a, b, select, cli.nvars, format),
        Command::Neighbors { complex } => cmd_neighbors(complex, cli.nvars, format),
        Command::SrIdeal { complex } => cmd_sr_ideal(complex, cli.nvars, format),
        Command::VerifyPoint {
            m1,
            m2,
            direction,
            point,
        } => cmd_verify_point(m1, m2, direction, point, cli.nvars, &field, format),
    }
}

fn cmd_hilbert(ideal: &str, nvars: Option<usize>, format: Format) -> Result<(), CliError> {
    let m = parse_ideal(ideal, nvars)?;
    let numerator = hilbert_numerator(&m);
    let names = var_names(m.nvars());
    match format {
        Format::JsonLines => println!(
            "{}",
            record(
                "numerator",
                json!({
                    "ideal": m.to_text(),
                    "nvars": m.nvars(),
                    "numerator": poly_value(&numerator, &names),
                })
            )
        ),
        _ => println!("{}", numerator.format(&names)),
    }
    Ok(())
}

fn status_text(status: EdgeStatus) -> &'static str {
    match status {
        EdgeStatus::NoDirection => "no-direction",
        EdgeStatus::EmptyScheme => "empty-scheme",
        EdgeStatus::Edge => "edge",
    }
}

fn cmd_edge(
    m1: &str,
    m2: &str,
    nvars: Option<usize>,
    field: &Field,
    path: PathMode,
    budget_lambda: usize,
    format: Format,
) -> Result<(), CliError> {
    let ideals = parse_ideals(&[m1, m2], nvars)?;
    if ideals[0] == ideals[1] {
        match format {
            Format::JsonLines => println!(
                "{}",
                record(
                    "edge",
                    json!({ "status": "no-direction", "identical": true })
                )
            ),
            _ => println!("status: no-direction (identical ideals)"),
        }
        return Ok(());
    }
    let result = edge_scheme_with_path(&ideals[0], &ideals[1], field, path)?;
    let scheme_info = match &result.scheme {
        Some(s) => {
            if s.num_vars() > budget_lambda {
                return Err(budget_error(format!(
                    "{} λ-variables exceed the budget {}",
                    s.num_vars(),
                    budget_lambda
                )));
            }
            Some((s, diagnostics(s, field)?))
        }
        None => None,
    };
    match format {
        Format::JsonLines => {
            let mut fields = json!({
                "m1": ideals[0].to_text(),
                "m2": ideals[1].to_text(),
                "status": status_text(result.status),
                "field": field_text(field),
            });
            if let Some(c) = &result.direction {
                fields["direction"] = direction_value(c);
            }
            if let Some((s, d)) = &scheme_info {
                fields["variables"] = json!(s.names());
                fields["equations"] = json!(s
                    .equations()
                    .iter()
                    .map(|e| poly_value(e, s.names()))
                    .collect::<Vec<_>>());
                fields["diagnostics"] = diagnostics_value(d);
            }
            println!("{}", record("edge", fields));
        }
        _ => {
            println!("status: {}", status_text(result.status));
            if let Some(c) = &result.direction {
                println!("direction: {}", c);
            }
            if let Some((s, d)) = &scheme_info {
                println!("variables: {}", s.names().join(", "));
                if s.equations().is_empty() {
                    println!("equations: none (affine space)");
                } else {
                    println!("equations:");
                    for text in s.format_equations() {
                        println!("  {} = 0", text);
                    }
                }
                println!("diagnostics: {}", diagnostics_text(d));
            }
        }
    }
    Ok(())
}

fn field_text(field: &Field) -> String {
    match field {
        Field::Q => "Q".to_string(),
        Field::Fp(p) => format!("Fp:{}", p),
    }
}

fn cmd_omega(
    ideal: &str,
    direction: &str,
    nvars: Option<usize>,
    field: &Field,
    budget_lambda: usize,
    format: Format,
) -> Result<(), CliError> {
    let c = parse_direction(direction)?;
    let m = parse_ideal(ideal, nvars.or(Some(c.nvars())))?;
    if m.nvars() != c.nvars() {
        return Err(CliError {
            code: 4,
            message: format!(
                "ideal lives in {} variables but the direction has {}",
                m.nvars(),
                c.nvars()
            ),
        });
    }
    let p = schubert_scheme(&m, &c)?;
    if p.num_lambdas() > budget_lambda {
        return Err(budget_error(format!(
            "{} λ-variables exceed the budget {}",
            p.num_lambdas(),
            budget_lambda
        )));
    }
    let base = p.base_scheme();
    let d = diagnostics(&base, field)?;
    let xnames = var_names(m.nvars());
    match format {
        Format::JsonLines => {
            let gens: Vec<_> = p
                .generators()
                .iter()
                .map(|g| json!(g.format(&xnames, p.lambda_names(), &c)))
                .collect();
            println!(
                "{}",
                record(
                    "omega",
                    json!({
                        "ideal": m.to_text(),
                        "direction": direction_value(&c),
                        "variables": p.lambda_names(),
                        "generators": gens,
                        "base": base
                            .equations()
                            .iter()
                            .map(|e| poly_value(e, base.names()))
                            .collect::<Vec<_>>(),
                        "diagnostics": diagnostics_value(&d),
                        "field": field_text(field),
                    })
                )
            );
        }
        _ => {
            println!("direction: {}", c);
            println!("variables: {}", p.lambda_names().join(", "));
            println!("universal generators:");
            for g in p.generators() {
                println!("  {}", g.format(&xnames, p.lambda_names(), &c));
            }
            if base.equations().is_empty() {
                println!("base equations: none (affine space)");
            } else {
                println!("base equations:");
                for text in base.format_equations() {
                    println!("  {} = 0", text);
                }
            }
            println!("diagnostics: {}", diagnostics_text(&d));
        }
    }
    Ok(())
}

fn cmd_partition_graph(
    r: u32,
    sweep: bool,
    field: &Field,
    budget_r: u32,
    format: Format,
) -> Result<(), CliError> {
    let graph = partition_graph(r, field, budget_r)?;
    if sweep {
        let fields = [Field::Q, Field::fp(2)?, Field::fp(3)?];
        let graphs: Vec<_> = fields
            .iter()
            .map(|k| partition_graph(r, k, budget_r))
            .collect::<Result<_, _>>()?;
        for (k, g) in fields.iter().zip(&graphs) {
            let diff = edge_set_difference(&graphs[0], g);
            let note = if diff.is_empty() {
                "edge set identical to Q".to_string()
            } else {
                format!(
                    "edge set differs from Q on {}",
                    diff.iter()
                        .map(|(a, b)| format!("{}-{}", a, b))
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            };
            match format {
                Format::JsonLines => println!(
                    "{}",
                    record(
                        "sweep",
                        json!({
                            "r": r,
                            "field": field_text(k),
                            "edges": g.edges.len(),
                            "matches_q": diff.is_empty(),
                        })
                    )
                ),
                _ => println!("{}: {} edges ({})", field_text(k), g.edges.len(), note),
            }
        }
        if format != Format::JsonLines {
            return Ok(());
        }
    }
    match format {
        Format::Dot => print!("{}", graph_dot(&graph, &format!("G{}", r))),
        Format::JsonLines => {
            for (i, (label, ideal)) in graph.labels.iter().zip(&graph.vertices).enumerate() {
                println!(
                    "{}",
                    record(
                        "vertex",
                        json!({
                            "index": i,
                            "partition": label.parts(),
                            "ideal": ideal.to_text(),
                        })
                    )
                );
            }
            for e in &graph.edges {
                println!(
                    "{}",
                    record(
                        "edge",
                        json!({
                            "source": e.endpoints.0,
                            "target": e.endpoints.1,
                            "direction": direction_value(&e.direction),
                            "equations": e
                                .scheme
                                .equations()
                                .iter()
                                .map(|eq| poly_value(eq, e.scheme.names()))
                                .collect::<Vec<_>>(),
                        })
                    )
                );
            }
        }
        Format::Human => {
            println!(
                "G^{}: {} vertices, {} edges over {}",
                r,
                graph.vertices.len(),
                graph.edges.len(),
                field_text(field)
            );
            for (i, (label, ideal)) in graph.labels.iter().zip(&graph.vertices).enumerate() {
                println!("  v{} = {} = <{}>", i, label, ideal.to_text());
            }
            for e in &graph.edges {
                println!(
                    "  {} -- {}  direction {}",
                    graph.labels[e.endpoints.0], graph.labels[e.endpoints.1], e.direction
                );
            }
        }
    }
    Ok(())
}

fn cmd_flip(
    complex: &str,
    a: &str,
    b: &str,
    select: &str,
    nvars: Option<usize>,
    format: Format,
) -> Result<(), CliError> {
    let x = parse_complex(complex, nvars)?;
    let a = parse_face(a)?;
    let b = parse_face(b)?;
    let selection = parse_selection(select)?;
    let flipped = flip(&x, a, b, &selection)?;
    let ideal = stanley_reisner(&flipped);
    let c = idealgraph::simplicial::direction_of_supports(x.nvars(), a, b);
    match format {
        Format::JsonLines => println!(
            "{}",
            record(
                "flip",
                json!({
                    "facets": facets_value(&flipped),
                    "facet_list": facet_list_text(&flipped),
                    "ideal": ideal.to_text(),
                    "direction": direction_value(&c),
                })
            )
        ),
        _ => {
            println!("{}", facet_list_text(&flipped));
            println!("ideal: {}", ideal.to_text());
            println!("direction: {}", c);
        }
    }
    Ok(())
}

fn cmd_neighbors(complex: &str, nvars: Option<usize>, format: Format) -> Result<(), CliError> {
    let x = parse_complex(complex, nvars)?;
    let neighbors = all_flip_neighbors(&x)?;
    for nb in &neighbors {
        let selection: Vec<usize> = nb.selection.iter().map(|s| s + 1).collect();
        match format {
            Format::JsonLines => println!(
                "{}",
                record(
                    "neighbor",
                    json!({
                        "direction": direction_value(&nb.direction),
                        "a": face_vertices(nb.a),
                        "b": face_vertices(nb.b),
                        "selection": selection,
                        "facets": facets_value(&nb.complex),
                        "facet_list": facet_list_text(&nb.complex),
                        "ideal": stanley_reisner(&nb.complex).to_text(),
                    })
                )
            ),
            _ => println!(
                "direction {}  S={:?}  ->  {}",
                nb.direction,
                selection,
                facet_list_text(&nb.complex)
            ),
        }
    }
    if neighbors.is_empty() && format == Format::Human {
        println!("no flip neighbors");
    }
    Ok(())
}

fn cmd_sr_ideal(complex: &str, nvars: Option<usize>, format: Format) -> Result<(), CliError> {
    let x = parse_complex(complex, nvars)?;
    let ideal = stanley_reisner(&x);
    match format {
        Format::JsonLines => println!(
            "{}",
            record(
                "sr-ideal",
                json!({
                    "facet_list": facet_list_text(&x),
                    "nvars": ideal.nvars(),
                    "ideal": ideal.to_text(),
                })
            )
        ),
        _ => println!("{}", ideal.to_text()),
    }
    Ok(())
}

fn cmd_verify_point(
    m1: &str,
    m2: &str,
    direction: &str,
    point: &str,
    nvars: Option<usize>,
    field: &Field,
    format: Format,
) -> Result<(), CliError> {
    let ideals = parse_ideals(&[m1, m2], nvars)?;
    let c = parse_direction(direction)?;
    if c.nvars() != ideals[0].nvars() {
        return Err(CliError {
            code: 4,
            message: "direction and ideals have different variable counts".into(),
        });
    }
    let scheme = omega_pair(&ideals[0], &ideals[1], &c)?;
    let values = parse_point(point, scheme.names(), field)?;
    let on_scheme = scheme
        .equations()
        .iter()
        .all(|e| field.is_zero(&e.eval_field(&values, field)));
    let valid = on_scheme && verify_edge_point(&values, &ideals[0], &ideals[1], &c, field)?;
    match format {
        Format::JsonLines => println!(
            "{}",
            record(
                "verify-point",
                json!({ "on_scheme": on_scheme, "valid": valid })
            )
        ),
        _ => {
            if !on_scheme {
                println!("invalid: the point does not satisfy the scheme equations");
            } else if valid {
                println!("valid: initial ideals are M1 and M2");
            } else {
                println!("invalid: wrong initial ideals");
            }
        }
    }
    Ok(())
}
