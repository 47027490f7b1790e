use std::io::Read;
use std::path::Path;

use ybe_core::catalog::{named_group, named_map, zappa_szep};
use ybe_core::finalg::{complete_regular_inverses, CompletelyRegular, FiniteGroup, FiniteSemigroup};
use ybe_core::semibrace::{
    associated_solution, build_clifford_semibrace, build_fg_family, build_leftzero_semibrace,
    build_rightzero_semibrace, check_middle_units_idempotent, check_prop22, check_rho_antihom,
    check_solution_condition, verify_generalized_left, GeneralizedLeftSemiBrace,
};
use ybe_core::sslattice::{
    build_generalized_semibrace, build_solution, composed_index_period, predicted_index_period,
    semibrace_semilattice_solution, SemilatticeSystem,
};
use ybe_core::ybesol::{classify, is_solution, power, SetSolution};
use ybe_core::Error;

use crate::document::{Kind, StructureDocument};
use crate::enumerate;
use crate::error::CliError;
use crate::report::{Format, Report};
use crate::{Cli, Command, Family, Mode, Outcome, OutputArg, TableSource, Target};

/// Groups searched by `enumerate --target fg-pairs` when no group is named.
const FG_GROUPS: [&str; 8] = ["C1", "C2", "C3", "C2xC2", "C4", "C5", "C6", "S3"];

pub fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Verify { path, kind } => verify(&read_document(path)?, *kind, format),
        Command::Build { family } => build(family, format),
        Command::Solution { path, out } => solution(&read_document(path)?, out, format),
        Command::Semilattice { path, mode, out } => {
            let (doc, report, _) = glue(&read_document(path)?, *mode)?;
            emit(&doc.to_canonical(), out, &report, format)
        }
        Command::IndexPeriod { path } => index_period(&read_document(path)?, format),
        Command::Enumerate {
            max_order,
            target,
            group,
            bound,
            out,
        } => enumerate_cmd(*max_order, *target, group.as_deref(), *bound, out, format),
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Malformed(format!("cannot read {}: {e}", path.display())))
    }
}

fn read_document(path: &Path) -> Result<StructureDocument, CliError> {
    StructureDocument::parse(&read_text(path)?)
}

/// Writes the product to `--output` or standard output, and the report to standard error.
fn emit(product: &str, out: &OutputArg, report: &Report, format: Format) -> Result<Outcome, CliError> {
    let stdout = match &out.output {
        Some(path) => {
            std::fs::write(path, product)
                .map_err(|e| CliError::Malformed(format!("cannot write {}: {e}", path.display())))?;
            String::new()
        }
        None => product.to_string(),
    };
    Ok(Outcome {
        code: 0,
        stdout,
        stderr: report.render(format),
    })
}

fn malformed_param(e: Error) -> CliError {
    CliError::Malformed(e.to_string())
}

fn yes_no_list(values: &[usize]) -> serde_json::Value {
    values.to_vec().into()
}

// ---------------------------------------------------------------- reports

fn semigroup_report(s: &FiniteSemigroup, report: &mut Report) {
    report.push("band", s.classify_band().name());
    report.push("idempotents", yes_no_list(&s.idempotents()));
    report.push("middle units", yes_no_list(&s.middle_units()));
    match complete_regular_inverses(s) {
        Ok(c) => {
            report.push("completely regular", true);
            report.push("inverses", yes_no_list(c.inverses()));
            report.push("clifford", c.is_clifford());
            let criterion = ybe_core::ybesol::check_right_cryptogroup_criterion(&c);
            report.verdict("cryptogroup criterion", criterion.witness());
        }
        Err(Error::NotCompletelyRegular(a)) => {
            report.push("completely regular", false);
            report.push("completely regular witness", a);
        }
        Err(e) => {
            report.push("completely regular", false);
            report.push("completely regular witness", e.to_string());
        }
    }
}

fn solution_report(r: &SetSolution, report: &mut Report) {
    let p = classify(r);
    report.verdict("YBE", p.braid_witness);
    report.push("left non-degenerate", p.left_nondegenerate);
    report.push("right non-degenerate", p.right_nondegenerate);
    report.push("bijective", p.bijective);
    report.push("involutive", p.involutive);
    report.push("idempotent", p.idempotent);
    report.push("cubic", p.cubic);
    report.push("index", p.index);
    report.push("period", p.period);
}

/// Semi-brace facts followed by the profile of the associated map.
fn semibrace_report(s: &GeneralizedLeftSemiBrace, report: &mut Report) -> Result<(), CliError> {
    let verdict = verify_generalized_left(s.additive(), s.multiplicative())?;
    report.push("generalized left semi-brace", verdict.generalized_left.holds());
    report.push("left semi-brace", verdict.left_semibrace());
    report.push("generalized right", verdict.generalized_right.holds());
    report.push("tags", verdict.tags());
    report.push("clifford", s.multiplicative().is_clifford());
    if let Some(left) = s.to_left_semibrace() {
        let facts = check_prop22(&left);
        report.push("zero", left.zero());
        report.push("zero facts", facts.all_hold());
        report.push("B + 0", yes_no_list(&facts.right_translate));
        report.push("0 + B", yes_no_list(&facts.left_translate));
        report.push("middle units idempotent", check_middle_units_idempotent(&left).holds());
        report.verdict("rho anti-homomorphism", check_rho_antihom(&left).witness());
        report.verdict("solution condition", check_solution_condition(&left).witness());
    }
    solution_report(&associated_solution(s), report);
    Ok(())
}

// ---------------------------------------------------------------- verify

fn verify(doc: &StructureDocument, kind: Option<Kind>, format: Format) -> Result<Outcome, CliError> {
    if let Some(k) = kind {
        if k != doc.kind {
            return Err(CliError::Malformed(format!(
                "expected a {} document, found {}",
                k.name(),
                doc.kind.name()
            )));
        }
    }
    let mut report = Report::new();
    report.push("kind", doc.kind.name());
    if let Some(name) = doc.name() {
        report.push("name", name);
    }
    report.push("order", doc.order);
    let pass = match doc.kind {
        Kind::Semigroup | Kind::Group => verify_table(doc, &mut report)?,
        Kind::Semibrace => verify_semibrace(doc, &mut report)?,
        Kind::Solution => {
            let r = doc.to_solution()?;
            solution_report(&r, &mut report);
            is_solution(&r).holds()
        }
        Kind::SemilatticeSystem => match glue(doc, None) {
            Ok((_, glued, _)) => {
                report.push("system", true);
                for (k, v) in glued_entries(&glued) {
                    report.push(k, v);
                }
                true
            }
            Err(CliError::Failed(msg)) => {
                report.push("system", false);
                report.push("system failure", msg);
                false
            }
            Err(e) => return Err(e),
        },
    };
    report.push("pass", pass);
    Ok(Outcome {
        code: if pass { 0 } else { 1 },
        stdout: report.render(format),
        stderr: String::new(),
    })
}

fn glued_entries(report: &Report) -> Vec<(&'static str, serde_json::Value)> {
    ["mode", "index", "period", "predicted index", "predicted period"]
        .into_iter()
        .filter_map(|k| report.get(k).map(|v| (k, v.clone())))
        .collect()
}

fn verify_table(doc: &StructureDocument, report: &mut Report) -> Result<bool, CliError> {
    let table = doc.to_table()?;
    let assoc = table.check_associative();
    report.verdict("associative", assoc.witness());
    if !assoc.holds() {
        return Ok(false);
    }
    let s = FiniteSemigroup::new(table)?;
    if doc.kind == Kind::Group {
        return Ok(match FiniteGroup::new(s) {
            Ok(g) => {
                report.push("group", true);
                report.push("identity", g.identity());
                report.push(
                    "inverses",
                    yes_no_list(&(0..g.order()).map(|a| g.inv(a)).collect::<Vec<_>>()),
                );
                report.push("commutative", g.is_commutative());
                true
            }
            Err(e) => {
                report.push("group", false);
                report.push("group failure", e.to_string());
                false
            }
        });
    }
    semigroup_report(&s, report);
    Ok(true)
}

fn verify_semibrace(doc: &StructureDocument, report: &mut Report) -> Result<bool, CliError> {
    let add = ybe_core::CayleyTable::from_rows(doc.add_table.as_ref().expect("validated"))?;
    let mul = ybe_core::CayleyTable::from_rows(doc.mul_table.as_ref().expect("validated"))?;
    let add_assoc = add.check_associative();
    let mul_assoc = mul.check_associative();
    report.verdict("additive associative", add_assoc.witness());
    report.verdict("multiplicative associative", mul_assoc.witness());
    if !add_assoc.holds() || !mul_assoc.holds() {
        return Ok(false);
    }
    let mul = FiniteSemigroup::new(mul)?;
    let cr = match complete_regular_inverses(&mul) {
        Ok(cr) => cr,
        Err(e) => {
            report.push("multiplicative completely regular", false);
            report.push("multiplicative completely regular witness", e.to_string());
            return Ok(false);
        }
    };
    report.push("multiplicative completely regular", true);
    let add = FiniteSemigroup::new(add)?;
    let verdict = verify_generalized_left(&add, &mul)?;
    if let Some(w) = verdict.generalized_left.witness() {
        report.push("generalized left semi-brace", false);
        report.push(
            "generalized left semi-brace witness",
            serde_json::to_value(w).expect("triples serialize"),
        );
        report.push("left semi-brace", false);
        return Ok(false);
    }
    let s = GeneralizedLeftSemiBrace::new(add, cr)?;
    semibrace_report(&s, report)?;
    Ok(true)
}

// ---------------------------------------------------------------- build

fn load_completely_regular(source: &TableSource) -> Result<(CompletelyRegular, String), CliError> {
    if let Some(name) = &source.group {
        let g = named_group(name).map_err(malformed_param)?;
        return Ok((g.completely_regular(), name.clone()));
    }
    let path = source.table.as_ref().expect("clap requires one source");
    let text = read_text(path)?;
    let rows: Vec<Vec<usize>> = match serde_json::from_str::<Vec<Vec<usize>>>(&text) {
        Ok(rows) => {
            ybe_core::CayleyTable::from_rows(&rows)?;
            rows
        }
        Err(_) => {
            let doc = StructureDocument::parse(&text)?;
            if !matches!(doc.kind, Kind::Semigroup | Kind::Group) {
                return Err(CliError::Malformed(format!(
                    "expected a semigroup or group document, found {}",
                    doc.kind.name()
                )));
            }
            doc.mul_table.expect("validated")
        }
    };
    Ok((CompletelyRegular::from_rows(&rows)?, path.display().to_string()))
}

fn build(family: &Family, format: Format) -> Result<Outcome, CliError> {
    let (doc, out) = match family {
        Family::Fg { group, f, g, out } => {
            let grp = named_group(group).map_err(malformed_param)?;
            let fm = named_map(group, &grp, f).map_err(malformed_param)?;
            let gm = named_map(group, &grp, g).map_err(malformed_param)?;
            let s = build_fg_family(&grp, &fm, &gm)?;
            let doc = StructureDocument::semibrace(s.generalized()).with_name(format!("fg {group} f={f} g={g}"));
            (doc, out)
        }
        Family::ZappaSzep { g, h, action, out } => {
            if !matches!(action.as_str(), "trivial" | "inversion") {
                return Err(CliError::Malformed(format!(
                    "unknown action `{action}`, expected trivial or inversion"
                )));
            }
            let gg = named_group(g).map_err(malformed_param)?;
            let hh = named_group(h).map_err(malformed_param)?;
            let s = zappa_szep(gg, hh, action)?.build()?;
            let doc = StructureDocument::semibrace(s.generalized()).with_name(format!("zappa-szep {g} {h} {action}"));
            (doc, out)
        }
        Family::Clifford { source, out } => {
            let (c, label) = load_completely_regular(source)?;
            let doc =
                StructureDocument::semibrace(&build_clifford_semibrace(&c)?).with_name(format!("clifford {label}"));
            (doc, out)
        }
        Family::RightZero { source, out } => {
            let (c, label) = load_completely_regular(source)?;
            let doc =
                StructureDocument::semibrace(&build_rightzero_semibrace(&c)?).with_name(format!("right-zero {label}"));
            (doc, out)
        }
        Family::LeftZero { source, out } => {
            let (c, label) = load_completely_regular(source)?;
            let doc =
                StructureDocument::semibrace(&build_leftzero_semibrace(&c)?).with_name(format!("left-zero {label}"));
            (doc, out)
        }
    };
    let mut report = Report::new();
    report.push("kind", doc.kind.name());
    report.push("name", doc.name().unwrap_or_default());
    report.push("order", doc.order);
    semibrace_report(&doc.to_semibrace()?, &mut report)?;
    emit(&doc.to_canonical(), out, &report, format)
}

// ---------------------------------------------------------------- solution

fn solution(doc: &StructureDocument, out: &OutputArg, format: Format) -> Result<Outcome, CliError> {
    if doc.kind != Kind::Semibrace {
        return Err(CliError::Malformed(format!(
            "expected a semibrace document, found {}",
            doc.kind.name()
        )));
    }
    let s = doc.to_semibrace()?;
    let r = associated_solution(&s);
    let mut report = Report::new();
    report.push("kind", "solution");
    report.push("order", r.order());
    if let Some(left) = s.to_left_semibrace() {
        report.verdict("solution condition", check_solution_condition(&left).witness());
    }
    solution_report(&r, &mut report);
    let mut result = StructureDocument::solution(&r).with_provenance("associated solution");
    if let Some(name) = doc.name() {
        result = result.with_name(name);
    }
    let mut outcome = emit(&result.to_canonical(), out, &report, format)?;
    if !is_solution(&r).holds() {
        outcome.code = 1;
    }
    Ok(outcome)
}

// ---------------------------------------------------------------- semilattice

fn payload_solution(doc: &StructureDocument) -> Result<SetSolution, CliError> {
    match doc.kind {
        Kind::Solution => doc.to_solution(),
        _ => Ok(associated_solution(&doc.to_semibrace()?)),
    }
}

fn system_of<P: ybe_core::sslattice::Payload>(
    doc: &StructureDocument,
    payloads: Vec<P>,
) -> Result<SemilatticeSystem<P>, CliError> {
    let y = doc.to_semilattice()?;
    let phi = doc
        .phi_maps()
        .map_err(|e| CliError::Failed(format!("malformed phi: {e}")))?;
    SemilatticeSystem::new(y, payloads, phi).map_err(|e| CliError::Failed(e.to_string()))
}

fn order_flags(r: &SetSolution, report: &mut Report) {
    let (r1, r2, r3) = (power(r, 1), power(r, 2), power(r, 3));
    report.push("r^2 = r", r2 == r1);
    report.push("r^3 = r", r3 == r1);
    report.push("r^3 = r^2", r3 == r2);
}

/// Glues a system document. Returns the combined document, the report and
/// the combined solution.
pub fn glue(doc: &StructureDocument, mode: Option<Mode>) -> Result<(StructureDocument, Report, SetSolution), CliError> {
    if doc.kind != Kind::SemilatticeSystem {
        return Err(CliError::Malformed(format!(
            "expected a semilattice_system document, found {}",
            doc.kind.name()
        )));
    }
    let payload_docs = doc.payload_documents();
    let all_semibraces = payload_docs.iter().all(|p| p.kind == Kind::Semibrace);
    let mode = mode.unwrap_or(if all_semibraces {
        Mode::Semibrace
    } else {
        Mode::Solution
    });
    if mode == Mode::Semibrace && !all_semibraces {
        return Err(CliError::Malformed("semibrace mode needs semibrace payloads".into()));
    }
    let solutions = payload_docs
        .iter()
        .map(payload_solution)
        .collect::<Result<Vec<_>, _>>()?;
    let sol_sys = system_of(doc, solutions)?;
    let mut report = Report::new();
    report.push(
        "mode",
        if mode == Mode::Semibrace {
            "semibrace"
        } else {
            "solution"
        },
    );
    report.push("components", doc.payload_documents().len());
    report.push("offsets", yes_no_list(sol_sys.offsets()));

    let (combined_doc, r) = match mode {
        Mode::Solution => {
            let r = build_solution(&sol_sys)?;
            let doc = StructureDocument::solution(&r).with_provenance("strong semilattice of solutions");
            (doc, r)
        }
        Mode::Semibrace => {
            let braces = payload_docs
                .iter()
                .map(|p| p.to_semibrace())
                .collect::<Result<Vec<_>, _>>()?;
            let sys = system_of(doc, braces)?;
            let union = build_generalized_semibrace(&sys)?;
            report.push("clifford", union.multiplicative().is_clifford());
            let r = semibrace_semilattice_solution(&sys)?;
            report.push("paths agree", true);
            let doc = StructureDocument::semibrace(&union).with_provenance("strong semilattice of semi-braces");
            (doc, r)
        }
    };
    report.push("YBE", is_solution(&r).holds());
    let (pi, pp) = predicted_index_period(&sol_sys);
    report.push("predicted index", pi);
    report.push("predicted period", pp);
    let (index, period) = composed_index_period(&sol_sys)?;
    report.push("index", index);
    report.push("period", period);
    order_flags(&r, &mut report);
    let mut combined_doc = combined_doc.with_offsets(sol_sys.offsets());
    if let Some(name) = doc.name() {
        combined_doc = combined_doc.with_name(name);
    }
    Ok((combined_doc, report, r))
}

// ---------------------------------------------------------------- index-period

fn index_period(doc: &StructureDocument, format: Format) -> Result<Outcome, CliError> {
    let mut report = Report::new();
    report.push("kind", doc.kind.name());
    match doc.kind {
        Kind::Solution | Kind::Semibrace => {
            let r = payload_solution(doc)?;
            let (i, p) = ybe_core::index_period(&r);
            report.push("index", i);
            report.push("period", p);
            order_flags(&r, &mut report);
        }
        Kind::SemilatticeSystem => {
            let (_, glued, _) = glue(doc, Some(Mode::Solution))?;
            for (k, v) in glued_entries(&glued).into_iter().skip(1) {
                report.push(k, v);
            }
        }
        Kind::Semigroup | Kind::Group => {
            return Err(CliError::Malformed(format!(
                "no solution in a {} document",
                doc.kind.name()
            )));
        }
    }
    Ok(Outcome {
        code: 0,
        stdout: report.render(format),
        stderr: String::new(),
    })
}

// ---------------------------------------------------------------- enumerate

fn enumerate_cmd(
    max_order: usize,
    target: Target,
    group: Option<&str>,
    bound: usize,
    out: &OutputArg,
    format: Format,
) -> Result<Outcome, CliError> {
    if max_order > bound {
        return Err(CliError::Malformed(format!(
            "--max-order {max_order} exceeds the bound {bound}"
        )));
    }
    if max_order == 0 {
        return Err(CliError::Malformed("--max-order must be positive".into()));
    }
    let mut docs: Vec<StructureDocument> = Vec::new();
    let target_name = match target {
        Target::Semibrace => {
            for n in 1..=max_order {
                for s in enumerate::semibraces(n) {
                    docs.push(StructureDocument::semibrace(s.generalized()).with_provenance("enumerate semibrace"));
                }
            }
            "semibrace"
        }
        Target::CryptoCounterexample => {
            if let Some((c, (a, b))) = enumerate::crypto_counterexample(max_order) {
                let doc = StructureDocument::semigroup(&c)
                    .with_name(format!("criterion fails at ({a}, {b})"))
                    .with_provenance("enumerate crypto-counterexample");
                docs.push(doc);
            }
            "crypto-counterexample"
        }
        Target::FgPairs => {
            let names: Vec<String> = match group {
                Some(g) => vec![g.to_string()],
                None => FG_GROUPS.iter().map(|s| s.to_string()).collect(),
            };
            for name in names {
                let g = named_group(&name).map_err(malformed_param)?;
                if g.order() > max_order {
                    if group.is_some() {
                        return Err(CliError::Malformed(format!(
                            "{name} has order {} > --max-order",
                            g.order()
                        )));
                    }
                    continue;
                }
                for (f, gm, s) in enumerate::fg_pairs(&g) {
                    let label = format!("{name} f={:?} g={:?}", f.as_slice(), gm.as_slice());
                    docs.push(
                        StructureDocument::semibrace(s.generalized())
                            .with_name(label)
                            .with_provenance("enumerate fg-pairs"),
                    );
                }
            }
            "fg-pairs"
        }
    };
    // every emitted document must load and verify again
    for doc in &docs {
        let reparsed = StructureDocument::parse(&doc.to_canonical())?;
        match reparsed.kind {
            Kind::Semibrace => {
                reparsed.to_semibrace()?;
            }
            _ => {
                reparsed.to_completely_regular()?;
            }
        }
    }
    let mut report = Report::new();
    report.push("target", target_name);
    report.push("max order", max_order);
    report.push("count", docs.len());
    let product: String = docs.iter().map(StructureDocument::to_canonical).collect();
    emit(&product, out, &report, format)
}
