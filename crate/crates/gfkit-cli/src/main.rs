//! Command line for the gfkit toolkit: construct finite fields, list
//! subfield lattices, describe Galois groups and the correspondence, solve
//! congruence systems, and classify unit groups, as text or JSON.
//!
//! Exit statuses: 0 success, 1 user error, 2 capacity exceeded, 3 internal
//! invariant violation. Output is written only after a command fully
//! succeeds, so failed runs produce no partial output.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use gfkit::arith::{divisors, gcd};
use gfkit::poly::PrimePoly;
use gfkit::{
    all_automorphisms, correspondence_table, crt_solve, element_order_mult, field_iso, fixed_field,
    frobenius, galois_group, min_poly, mult_generator, quotient_action_check, stabilizer,
    subfield_lattice, unit_group_structure, CrtSystem, Error, FieldSpec, MinimalPoly, Result,
    ZpMatrix,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "gfkit",
    version,
    about = "Finite fields, their Galois groups, and modular arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Upper bound for exhaustive scans over field elements
    #[arg(long, global = true, default_value_t = 1 << 20)]
    max_order: u64,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Construct GF(p^n) and print its defining data
    Field {
        p: u64,
        n: usize,
        /// Defining modulus, e.g. "x^4+x^3+1"; the least irreducible if omitted
        #[arg(long)]
        modulus: Option<String>,
    },
    /// List the subfield lattice of GF(p^n)
    Subfields { p: u64, n: usize },
    /// Describe the Galois group of GF(p^n) over its degree-s subfield
    Galois { p: u64, n: usize, s: u64 },
    /// Print the Galois correspondence table with its verification checks
    Correspond { p: u64, n: usize, s: u64 },
    /// Solve congruences r%m with pairwise coprime moduli
    Crt {
        #[arg(required = true)]
        congruences: Vec<String>,
    },
    /// Structure of the unit group U(n)
    Units { n: u64 },
    /// A generator of the multiplicative group of GF(p^n)
    Generator { p: u64, n: usize },
    /// Minimal polynomial of an element over a subfield
    Minpoly {
        p: u64,
        n: usize,
        /// Element in polynomial form, e.g. "x^3+x"
        element: String,
        /// Degree of the base subfield
        #[arg(long, default_value_t = 1)]
        base: u64,
    },
    /// Multiplicative order of a field element
    Order {
        p: u64,
        n: usize,
        /// Element in polynomial form, e.g. "x+1"
        element: String,
    },
    /// Isomorphism between two models of GF(p^n)
    Iso {
        p: u64,
        n: usize,
        /// Modulus of the source field
        source: String,
        /// Modulus of the target field
        target: String,
    },
    /// Run the invariant battery for GF(p^n) over its degree-s subfield
    Verify {
        p: u64,
        n: usize,
        #[arg(default_value_t = 1)]
        s: u64,
    },
}

struct CommandOutput {
    body: String,
    status: u8,
}

fn ok(body: String) -> Result<CommandOutput> {
    Ok(CommandOutput { body, status: 0 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let status = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(status);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.body);
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Capacity { .. } => 2,
                Error::Internal(_) => 3,
                _ => 1,
            })
        }
    }
}

fn run(cli: &Cli) -> Result<CommandOutput> {
    let fmt = cli.format;
    let limit = cli.max_order;
    match &cli.command {
        Command::Field { p, n, modulus } => cmd_field(*p, *n, modulus.as_deref(), fmt, limit),
        Command::Subfields { p, n } => cmd_subfields(*p, *n, fmt, limit),
        Command::Galois { p, n, s } => cmd_galois(*p, *n, *s, fmt, limit),
        Command::Correspond { p, n, s } => cmd_correspond(*p, *n, *s, fmt, limit),
        Command::Crt { congruences } => cmd_crt(congruences, fmt),
        Command::Units { n } => cmd_units(*n, fmt),
        Command::Generator { p, n } => cmd_generator(*p, *n, fmt, limit),
        Command::Minpoly {
            p,
            n,
            element,
            base,
        } => cmd_minpoly(*p, *n, element, *base, fmt, limit),
        Command::Order { p, n, element } => cmd_order(*p, *n, element, fmt, limit),
        Command::Iso {
            p,
            n,
            source,
            target,
        } => cmd_iso(*p, *n, source, target, fmt, limit),
        Command::Verify { p, n, s } => cmd_verify(*p, *n, *s, fmt, limit),
    }
}

/// Aligned key-value block, one row per line.
fn kv(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    out
}

/// Aligned column table with a header row.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let format_row = |cells: &[String]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{cell:<width$}", width = widths[i]));
        }
        line.trim_end().to_string()
    };
    let mut out = format_row(&header.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    out.push('\n');
    for row in rows {
        out.push_str(&format_row(row));
        out.push('\n');
    }
    out
}

fn json_line(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("JSON value is serializable");
    s.push('\n');
    s
}

fn spec_with_limit(p: u64, n: usize, modulus: Option<PrimePoly>, limit: u64) -> Result<FieldSpec> {
    FieldSpec::with_scan_limit(p, n, modulus, limit)
}

fn parse_congruence(s: &str) -> Result<(u64, u64)> {
    let (r, m) = s
        .split_once('%')
        .ok_or_else(|| Error::Parse(format!("expected a congruence r%m, got '{s}'")))?;
    let r = r
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad residue in '{s}'")))?;
    let m = m
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad modulus in '{s}'")))?;
    Ok((r, m))
}

/// Scalar polynomial in the variable y, sparse descending, with the
/// characteristic suffix: the shape the library uses for x.
fn scalar_poly_in_y(coeffs: &[u64], p: u64) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        parts.push(match (i, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "y".to_string(),
            (1, c) => format!("{c}y"),
            (i, 1) => format!("y^{i}"),
            (i, c) => format!("{c}y^{i}"),
        });
    }
    if parts.is_empty() {
        parts.push("0".to_string());
    }
    format!("{} (mod {p})", parts.join("+"))
}

/// Minimal polynomial in the variable y. Over the prime field the
/// coefficients are scalars; over a larger base they are field elements and
/// are parenthesized.
fn minpoly_in_y(mp: &MinimalPoly) -> String {
    if let Some(pp) = mp.as_prime_poly() {
        return scalar_poly_in_y(pp.coeffs(), pp.characteristic());
    }
    let mut parts = Vec::new();
    for (i, c) in mp.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let y = match i {
            0 => String::new(),
            1 => "y".to_string(),
            i => format!("y^{i}"),
        };
        parts.push(if i == 0 {
            let s = c.to_string();
            if s.contains('+') {
                format!("({s})")
            } else {
                s
            }
        } else if c.is_one() {
            y
        } else {
            format!("({c}){y}")
        });
    }
    if parts.is_empty() {
        parts.push("0".to_string());
    }
    parts.join("+")
}

fn cmd_field(
    p: u64,
    n: usize,
    modulus: Option<&str>,
    fmt: Format,
    limit: u64,
) -> Result<CommandOutput> {
    let modulus = modulus
        .map(|s| PrimePoly::parse_with_char(s, p))
        .transpose()?;
    let spec = spec_with_limit(p, n, modulus, limit)?;
    ok(match fmt {
        Format::Text => kv(&[
            ("p", p.to_string()),
            ("n", n.to_string()),
            ("order", spec.order().to_string()),
            ("modulus", spec.modulus().to_string()),
        ]),
        Format::Json => json_line(&json!({
            "p": p,
            "n": n,
            "modulus": spec.modulus().coeffs(),
            "order": spec.order(),
        })),
    })
}

fn cmd_subfields(p: u64, n: usize, fmt: Format, limit: u64) -> Result<CommandOutput> {
    let spec = spec_with_limit(p, n, None, limit)?;
    let lattice = subfield_lattice(&spec)?;
    ok(match fmt {
        Format::Text => {
            let rows: Vec<Vec<String>> = lattice
                .values()
                .map(|sub| {
                    vec![
                        sub.degree().to_string(),
                        sub.order().to_string(),
                        sub.generator().to_string(),
                        sub.basis()
                            .iter()
                            .map(|b| b.to_string())
                            .collect::<Vec<_>>()
                            .join(", "),
                    ]
                })
                .collect();
            table(&["degree", "order", "generator", "basis"], &rows)
        }
        Format::Json => {
            let subs: Vec<Value> = lattice
                .values()
                .map(|sub| {
                    json!({
                        "degree": sub.degree(),
                        "order": sub.order(),
                        "generator": sub.generator().coeffs(),
                        "basis": sub.basis().iter().map(|b| b.coeffs()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            json_line(&json!({ "p": p, "n": n, "subfields": subs }))
        }
    })
}

fn cmd_galois(p: u64, n: usize, s: u64, fmt: Format, limit: u64) -> Result<CommandOutput> {
    let spec = spec_with_limit(p, n, None, limit)?;
    let group = galois_group(&spec, s)?;
    ok(match fmt {
        Format::Text => kv(&[
            ("p", p.to_string()),
            ("n", n.to_string()),
            ("base degree", s.to_string()),
            ("base order", group.base().order().to_string()),
            ("group order", group.order().to_string()),
            ("generator", group.generator().to_string()),
            (
                "members",
                group
                    .members()
                    .iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
            ),
        ]),
        Format::Json => json_line(&json!({
            "p": p,
            "n": n,
            "base_degree": s,
            "order": group.order(),
            "generator_exponent": group.generator().exponent(),
            "members": group.members().iter().map(|a| a.exponent()).collect::<Vec<_>>(),
        })),
    })
}

fn cmd_correspond(p: u64, n: usize, s: u64, fmt: Format, limit: u64) -> Result<CommandOutput> {
    let spec = spec_with_limit(p, n, None, limit)?;
    let group = galois_group(&spec, s)?;
    let entries = correspondence_table(&group)?;

    let mut rows = Vec::new();
    for entry in &entries {
        let sub_back = stabilizer(&group, entry.field())?;
        let field_back = fixed_field(&group, &sub_back)?;
        let round_trip = sub_back == *entry.subgroup() && field_back == *entry.field();
        let action = quotient_action_check(&group, entry)?.passed();
        rows.push((entry, round_trip, action));
    }

    ok(match fmt {
        Format::Text => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|(entry, rt, qa)| {
                    vec![
                        entry.subgroup().order().to_string(),
                        entry.subgroup().generator().to_string(),
                        entry.quotient_order().to_string(),
                        entry.field().degree().to_string(),
                        if *rt { "ok" } else { "FAIL" }.to_string(),
                        if *qa { "ok" } else { "FAIL" }.to_string(),
                    ]
                })
                .collect();
            table(
                &[
                    "subgroup order",
                    "generator",
                    "degree over base",
                    "absolute degree",
                    "round trip",
                    "quotient action",
                ],
                &cells,
            )
        }
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|(entry, rt, qa)| {
                    json!({
                        "subgroup_order": entry.subgroup().order(),
                        "generator_exponent": entry.subgroup().generator().exponent(),
                        "field_degree_over_base": entry.quotient_order(),
                        "field_degree_absolute": entry.field().degree(),
                        "checks": { "round_trip": rt, "quotient_action": qa },
                    })
                })
                .collect();
            json_line(&Value::Array(list))
        }
    })
}

fn cmd_crt(congruences: &[String], fmt: Format) -> Result<CommandOutput> {
    let pairs: Vec<(u64, u64)> = congruences
        .iter()
        .map(|s| parse_congruence(s))
        .collect::<Result<_>>()?;
    let system = CrtSystem::new(&pairs)?;
    let solution = crt_solve(&system)?;
    ok(match fmt {
        Format::Text => format!("{solution}\n"),
        Format::Json => json_line(&json!({
            "residue": solution.value(),
            "modulus": solution.modulus(),
        })),
    })
}

fn cmd_units(n: u64, fmt: Format) -> Result<CommandOutput> {
    let structure = unit_group_structure(n)?;
    ok(match fmt {
        Format::Text => kv(&[
            ("n", n.to_string()),
            ("order", structure.order().to_string()),
            ("structure", structure.to_string()),
            (
                "cyclic",
                if structure.is_cyclic() { "yes" } else { "no" }.to_string(),
            ),
        ]),
        Format::Json => json_line(&json!({
            "n": n,
            "structure": structure.factors(),
            "order": structure.order(),
        })),
    })
}

fn cmd_generator(p: u64, n: usize, fmt: Format, limit: u64) -> Result<CommandOutput> {
    let spec = spec_with_limit(p, n, None, limit)?;
    let g = mult_generator(&spec)?;
    let order = element_order_mult(&g)?;
    ok(match fmt {
        Format::Text => kv(&[("generator", g.to_string()), ("order", order.to_string())]),
        Format::Json => json_line(&json!({
            "p": p,
            "n": n,
            "generator": g.coeffs(),
            "order": order,
        })),
    })
}

fn cmd_minpoly(
    p: u64,
    n: usize,
    element: &str,
    base: u64,
    fmt: Format,
    limit: u64,
) -> Result<CommandOutput> {
    let spec = spec_with_limit(p, n, None, limit)?;
    let a = spec.parse_element(element)?;
    let mp = min_poly(&a, base)?;
    ok(match fmt {
        Format::Text => kv(&[
            ("element", a.to_string()),
            ("base degree", base.to_string()),
            ("degree", mp.degree().to_string()),
            ("minpoly", minpoly_in_y(&mp)),
        ]),
        Format::Json => json_line(&json!({
            "p": p,
            "n": n,
            "element": a.coeffs(),
            "base_degree": base,
            "degree": mp.degree(),
            "coeffs": mp.coeffs().iter().map(|c| c.coeffs()).collect::<Vec<_>>(),
        })),
    })
}

fn cmd_order(p: u64, n: usize, element: &str, fmt: Format, limit: u64) -> Result<CommandOutput> {
    let spec = spec_with_limit(p, n, None, limit)?;
    let a = spec.parse_element(element)?;
    let order = element_order_mult(&a)?;
    ok(match fmt {
        Format::Text => kv(&[("element", a.to_string()), ("order", order.to_string())]),
        Format::Json => json_line(&json!({
            "p": p,
            "n": n,
            "element": a.coeffs(),
            "order": order,
        })),
    })
}

fn cmd_iso(
    p: u64,
    n: usize,
    source: &str,
    target: &str,
    fmt: Format,
    limit: u64,
) -> Result<CommandOutput> {
    let m1 = PrimePoly::parse_with_char(source, p)?;
    let m2 = PrimePoly::parse_with_char(target, p)?;
    let src = spec_with_limit(p, n, Some(m1), limit)?;
    let dst = spec_with_limit(p, n, Some(m2), limit)?;
    let iso = field_iso(&src, &dst)?;
    ok(match fmt {
        Format::Text => kv(&[
            ("source", src.modulus().to_string()),
            ("target", dst.modulus().to_string()),
            ("x maps to", iso.image_of_x().to_string()),
        ]),
        Format::Json => json_line(&json!({
            "p": p,
            "n": n,
            "source_modulus": src.modulus().coeffs(),
            "target_modulus": dst.modulus().coeffs(),
            "image_of_x": iso.image_of_x().coeffs(),
        })),
    })
}

fn cmd_verify(p: u64, n: usize, s: u64, fmt: Format, limit: u64) -> Result<CommandOutput> {
    let spec = spec_with_limit(p, n, None, limit)?;
    let degree = spec.degree() as u64;
    let mut checks: Vec<(&str, bool)> = Vec::new();

    let autos_ok = match all_automorphisms(&spec) {
        Ok(autos) => autos.len() == spec.degree(),
        Err(Error::Internal(_)) => false,
        Err(e) => return Err(e),
    };
    checks.push(("automorphism count", autos_ok));

    // fixed points of Phi^k number p^gcd(k, n): kernel dimension always,
    // element scan when the field is small
    let mut fixed_ok = true;
    for k in 0..=degree {
        let mk = spec
            .frobenius_matrix()
            .pow(k)
            .sub(&ZpMatrix::identity(p, spec.degree()));
        if mk.kernel_basis().len() as u64 != gcd(k, degree) {
            fixed_ok = false;
        }
    }
    if spec.order() <= 1 << 12 {
        for k in 0..=degree {
            let count = spec
                .iter_elements()
                .filter(|a| frobenius(a, k) == *a)
                .count() as u64;
            if count != p.pow(gcd(k, degree) as u32) {
                fixed_ok = false;
            }
        }
    }
    checks.push(("fixed point law", fixed_ok));

    let (round_trips_ok, action_ok) = match galois_group(&spec, s) {
        Err(Error::Internal(_)) => (false, false),
        Err(e) => return Err(e),
        Ok(group) => match correspondence_table(&group) {
            Err(Error::Internal(_)) => (false, false),
            Err(e) => return Err(e),
            Ok(entries) => {
                let round_trips = entries.len() == divisors(group.order()).len();
                let mut action = true;
                for entry in &entries {
                    match quotient_action_check(&group, entry) {
                        Ok(report) => action &= report.passed(),
                        Err(Error::Internal(_)) => action = false,
                        Err(e) => return Err(e),
                    }
                }
                (round_trips, action)
            }
        },
    };
    checks.push(("correspondence round trips", round_trips_ok));
    checks.push(("quotient action", action_ok));

    let passed = checks.iter().all(|(_, ok)| *ok);
    let body = match fmt {
        Format::Text => {
            let mut rows: Vec<(&str, String)> = checks
                .iter()
                .map(|(name, ok)| (*name, if *ok { "ok" } else { "FAIL" }.to_string()))
                .collect();
            rows.push(("result", if passed { "ok" } else { "FAIL" }.to_string()));
            kv(&rows)
        }
        Format::Json => {
            let list: Vec<Value> = checks
                .iter()
                .map(|(name, ok)| json!({ "name": name, "passed": ok }))
                .collect();
            json_line(&json!({
                "p": p,
                "n": n,
                "base_degree": s,
                "checks": list,
                "passed": passed,
            }))
        }
    };
    Ok(CommandOutput {
        body,
        status: if passed { 0 } else { 3 },
    })
}
