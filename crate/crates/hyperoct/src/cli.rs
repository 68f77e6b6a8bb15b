//! Command-line front end: descriptor parsing, report emission in JSON, CSV
//! or text, budget plumbing, and the verification suite runner.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 resource-budget error. Errors also emit a machine-readable JSON object
//! on stderr.

use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bn_theory::{
    branch_up_b1, branch_up_b2, branch_up_sub2, passive_induction_mult, AbelianWreathLabel,
    B1Factor, B2SubIrrep, BnIrrepLabel, LabelMultiset,
};
use crate::char_oracle::{match_bn_rows, match_wreath_rows, signed_classes_of_table, DiskCache, Oracle};
use crate::classifier::{
    enumerate_strong_gelfand, family_decision, instantiate_table1, Budgets, Method, Verdict,
};
use crate::combinatorics::Partition;
use crate::groups::descriptor::{make_subgroup, SubgroupDescriptor};
use crate::verification::{run_all, VerificationCtx};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser, Debug)]
#[command(
    name = "hyperoct",
    about = "Exact representation theory of (Z/r) wr S_n: branching rules, character tables, strong Gelfand classification",
    after_help = crate::groups::descriptor::GRAMMAR_HELP,
    version
)]
pub struct Invocation {
    #[command(subcommand)]
    pub command: Command,

    /// Base-group modulus r of the ambient wreath product.
    #[arg(long, global = true, default_value_t = 2, env = "HYPEROCT_R")]
    pub r: u32,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text, env = "HYPEROCT_FORMAT")]
    pub format: Format,

    /// Directory for the on-disk character-table cache.
    #[arg(long, global = true, env = "HYPEROCT_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Disable the on-disk cache even if a directory is configured.
    #[arg(long, global = true, env = "HYPEROCT_NO_CACHE")]
    pub no_cache: bool,

    /// Largest ambient order admitted to full lattice searches.
    #[arg(long, global = true, default_value_t = 400, env = "HYPEROCT_BUDGET_ORDER")]
    pub budget_order: u64,

    /// Largest raw subgroup count a lattice search may visit.
    #[arg(long, global = true, default_value_t = 200_000, env = "HYPEROCT_BUDGET_SUBGROUPS")]
    pub budget_subgroups: u64,

    /// Largest element count a single closure may materialise.
    #[arg(long, global = true, default_value_t = 1 << 21, env = "HYPEROCT_BUDGET_ELEMENTS")]
    pub budget_elements: u64,

    /// Run the slow-gated checks too (verify-paper subcommand).
    #[arg(long, global = true)]
    pub slow: bool,

    /// Assert that no randomness is involved anywhere (always true; this
    /// flag is a contract marker and changes nothing).
    #[arg(long, global = true)]
    pub seedless: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decompose a branching rule: which irreducibles appear when a labelled
    /// module is induced one or two coordinates up.
    Branch {
        /// Rule id: L1.1 / L1.2 / L1.3 (one coordinate: trivial, flip-sign,
        /// passive), L2.1..L2.5 (the five B_2 factors), D2.0..D2.3,
        /// H2.0..H2.3, S2.triv, S2.sign.
        #[arg(long)]
        lemma: String,
        /// Base label, e.g. "[],[1]" for lambda = [], mu = [1].
        #[arg(long)]
        label: String,
        /// Expected ambient n of the result (validated when given).
        #[arg(long)]
        n: Option<u32>,
    },
    /// Multiplicity of a wreath irreducible in the induction of a Specht
    /// module from the passive factor.
    Mult {
        /// The Specht label, e.g. "[4,3,2,1]".
        #[arg(long)]
        w: String,
        /// The wreath label as r comma-separated blocks, e.g.
        /// "[3,2,1],[3,1]".
        #[arg(long)]
        u: String,
        /// fast = label formula, oracle = character tables, both = compare.
        #[arg(long, default_value = "fast")]
        method: String,
    },
    /// Print (and for full wreath groups, label) a character table.
    Chartable {
        /// Subgroup descriptor, e.g. "B(2)".
        group: String,
    },
    /// Gelfand / strong-Gelfand verdict for a pair of descriptors.
    CheckPair {
        /// Ambient descriptor, e.g. "B(2)".
        group: String,
        /// Subgroup descriptor; `diag` and `triv` inherit the ambient n.
        subgroup: String,
        /// Check the plain Gelfand property instead of strong Gelfand.
        #[arg(long)]
        gelfand: bool,
    },
    /// The positive classification-table rows at a given n.
    Table1 {
        #[arg(long)]
        n: u32,
    },
    /// Enumerate strong Gelfand subgroups of B_n.
    Classify {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "fast")]
        method: String,
    },
    /// Run the verification suite (all fast checks; `--slow` adds the rest).
    VerifyPaper,
}

fn budgets_of(inv: &Invocation) -> Budgets {
    Budgets {
        lattice_order: inv.budget_order,
        subgroups: inv.budget_subgroups,
        elements: inv.budget_elements,
    }
}

fn oracle_of(inv: &Invocation) -> Oracle {
    let disk = if inv.no_cache {
        None
    } else {
        inv.cache_dir.as_ref().map(DiskCache::new)
    };
    Oracle::new(disk)
}

/// Parses "[3,2,1]" into a partition.
fn parse_partition(text: &str) -> Result<Partition> {
    let t = text.trim();
    if !t.starts_with('[') || !t.ends_with(']') {
        return Err(Error::InvalidArgument(format!("expected a bracketed list, got `{text}`")));
    }
    let inner = &t[1..t.len() - 1];
    if inner.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<u32>> = inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidArgument(format!("bad partition part `{p}`")))
        })
        .collect();
    Partition::new(parts?)
}

/// Splits "[..],[..],..." at top-level commas.
fn parse_partition_list(text: &str) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    let s = text.trim();
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(parse_partition(&s[start..i])?);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(parse_partition(&s[start..])?);
    Ok(out)
}

fn parse_bn_label(text: &str) -> Result<BnIrrepLabel> {
    let parts = parse_partition_list(text)?;
    if parts.len() != 2 {
        return Err(Error::InvalidArgument(format!(
            "a B_n label needs two partitions, got {}",
            parts.len()
        )));
    }
    let mut it = parts.into_iter();
    Ok(BnIrrepLabel::new(it.next().expect("two"), it.next().expect("two")))
}

#[derive(Serialize)]
struct BranchReport {
    lemma: String,
    label: BnIrrepLabel,
    n: u32,
    summands: Vec<SummandRow>,
}

#[derive(Serialize)]
struct SummandRow {
    label: BnIrrepLabel,
    mult: u64,
}

fn multiset_rows(m: &LabelMultiset) -> Vec<SummandRow> {
    m.iter().map(|(l, &mult)| SummandRow { label: l.clone(), mult }).collect()
}

fn run_branch(lemma: &str, label: &str, n: Option<u32>) -> Result<BranchReport> {
    let base = parse_bn_label(label)?;
    let b2 = |l: &[u32], m: &[u32]| {
        BnIrrepLabel::new(
            Partition::new(l.to_vec()).expect("valid"),
            Partition::new(m.to_vec()).expect("valid"),
        )
    };
    let (result, step): (LabelMultiset, u32) = match lemma {
        "L1.1" => (branch_up_b1(&base, B1Factor::PosOne), 1),
        "L1.2" => (branch_up_b1(&base, B1Factor::NegOne), 1),
        "L1.3" => (branch_up_b1(&base, B1Factor::PassiveS1), 1),
        "L2.1" => (branch_up_b2(&base, &b2(&[2], &[]))?, 2),
        "L2.2" => (branch_up_b2(&base, &b2(&[1, 1], &[]))?, 2),
        "L2.3" => (branch_up_b2(&base, &b2(&[1], &[1]))?, 2),
        "L2.4" => (branch_up_b2(&base, &b2(&[], &[1, 1]))?, 2),
        "L2.5" => (branch_up_b2(&base, &b2(&[], &[2]))?, 2),
        "D2.0" | "D2.1" | "D2.2" | "D2.3" => {
            let i: u8 = lemma[3..].parse().expect("digit");
            (branch_up_sub2(&base, B2SubIrrep::D2(i))?, 2)
        }
        "H2.0" | "H2.1" | "H2.2" | "H2.3" => {
            let i: u8 = lemma[3..].parse().expect("digit");
            (branch_up_sub2(&base, B2SubIrrep::H2(i))?, 2)
        }
        "S2.triv" => (branch_up_sub2(&base, B2SubIrrep::S2barTrivial)?, 2),
        "S2.sign" => (branch_up_sub2(&base, B2SubIrrep::S2barSign)?, 2),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "unknown rule `{lemma}`; expected L1.1-L1.3, L2.1-L2.5, D2.0-D2.3, H2.0-H2.3, S2.triv, S2.sign"
            )))
        }
    };
    let result_n = base.n() + step;
    if let Some(expected) = n {
        if expected != result_n {
            return Err(Error::InvalidArgument(format!(
                "rule {lemma} on a label of B_{} lands in B_{result_n}, not B_{expected}",
                base.n()
            )));
        }
    }
    Ok(BranchReport {
        lemma: lemma.to_string(),
        label: base,
        n: result_n,
        summands: multiset_rows(&result),
    })
}

#[derive(Serialize)]
struct MultReport {
    r: u32,
    w: Partition,
    u: AbelianWreathLabel,
    multiplicity: String,
    method: String,
}

fn run_mult(inv: &Invocation, w: &str, u: &str, method: &str) -> Result<MultReport> {
    let w = parse_partition(w)?;
    let blocks = parse_partition_list(u)?;
    if blocks.len() != inv.r as usize {
        return Err(Error::InvalidArgument(format!(
            "expected {} residue blocks for r = {}, got {}",
            inv.r,
            inv.r,
            blocks.len()
        )));
    }
    let u = AbelianWreathLabel::new(inv.r, blocks)?;
    let fast = passive_induction_mult(&w, &u)?;
    if method == "oracle" || method == "both" {
        let n = u.n();
        let oracle = oracle_of(inv);
        let g = make_subgroup(&SubgroupDescriptor::Full(n), inv.r)?
            .to_perm_group(inv.budget_elements)?;
        let k = make_subgroup(&SubgroupDescriptor::PassiveSn(n), inv.r)?
            .to_perm_group(inv.budget_elements)?;
        let p = oracle.pair_prime(&g, &k)?;
        let gt = oracle.character_table_at(&g, p)?;
        let kt = oracle.character_table_at(&k, p)?;
        let fusion = crate::char_oracle::fusion_map(&k, &kt, &g, &gt)?;
        let g_labels = match_wreath_rows(&gt, inv.r, n)?;
        let chi = g_labels
            .iter()
            .position(|l| *l == u)
            .ok_or_else(|| Error::Consistency("label missing from the oracle table".into()))?;
        // Locate the Specht row of the passive factor by its character
        // values.
        let kt_types: Result<Vec<Partition>> = kt
            .classes
            .reps
            .iter()
            .map(|rep| {
                let e = crate::groups::element::WreathElement::from_embedded(
                    inv.r,
                    n as usize,
                    rep,
                )?;
                Ok(Partition::from_unsorted(e.sigma.cycle_lengths()))
            })
            .collect();
        let kt_types = kt_types?;
        let psi = (0..kt.rows.len())
            .find(|&row| {
                kt_types.iter().enumerate().all(|(j, ct)| {
                    let v = crate::combinatorics::sym_char_value(&w, ct).expect("sizes agree");
                    let p_big = num_bigint::BigInt::from(p);
                    let m = ((&v % &p_big) + &p_big) % &p_big;
                    u64::try_from(m).expect("residue") == kt.rows[row][j]
                })
            })
            .ok_or_else(|| Error::Consistency("Specht row missing from the oracle table".into()))?;
        let oracle_m = crate::char_oracle::induce_mult(&gt, &kt, &fusion, psi, chi)?;
        if method == "both" && num_bigint::BigUint::from(oracle_m) != fast {
            return Err(Error::Verification(format!(
                "label formula gives {fast} but the oracle gives {oracle_m}"
            )));
        }
        if method == "oracle" {
            return Ok(MultReport {
                r: inv.r,
                w,
                u,
                multiplicity: oracle_m.to_string(),
                method: method.into(),
            });
        }
    }
    Ok(MultReport { r: inv.r, w, u, multiplicity: fast.to_string(), method: method.into() })
}

#[derive(Serialize)]
struct CharTableReport {
    group: String,
    order: u64,
    prime: u64,
    class_sizes: Vec<u64>,
    degrees: Vec<u64>,
    /// Exact integer values for labelled full wreath groups, residues
    /// otherwise.
    rows: Vec<CharRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    classes: Option<Vec<String>>,
}

#[derive(Serialize)]
struct CharRow {
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    degree: u64,
    values: Vec<i64>,
}

fn run_chartable(inv: &Invocation, group: &str) -> Result<CharTableReport> {
    let d = SubgroupDescriptor::parse(group)?;
    let oracle = oracle_of(inv);
    let sub = make_subgroup(&d, inv.r)?;
    let g = sub.to_perm_group(inv.budget_elements)?;
    let table = oracle.character_table(&g)?;
    let (labels, classes): (Option<Vec<String>>, Option<Vec<String>>) = match d {
        SubgroupDescriptor::Full(n) if inv.r == 2 => {
            let labels = match_bn_rows(&table, n)?;
            let classes = signed_classes_of_table(&table, n as usize)?;
            (
                Some(labels.iter().map(|l| l.to_string()).collect()),
                Some(classes.iter().map(|c| c.to_string()).collect()),
            )
        }
        SubgroupDescriptor::Full(n) => {
            let labels = match_wreath_rows(&table, inv.r, n)?;
            (Some(labels.iter().map(|l| format!("{l:?}")).collect()), None)
        }
        _ => (None, None),
    };
    let exact = labels.is_some() && inv.r == 2;
    let rows = table
        .rows
        .iter()
        .enumerate()
        .map(|(i, row)| CharRow {
            label: labels.as_ref().map(|ls| ls[i].clone()),
            degree: table.degrees[i],
            values: row
                .iter()
                .map(|&v| if exact { table.lift(v) } else { v as i64 })
                .collect(),
        })
        .collect();
    Ok(CharTableReport {
        group: d.to_string(),
        order: g.order(),
        prime: table.prime,
        class_sizes: table.classes.sizes.clone(),
        degrees: table.degrees.clone(),
        rows,
        classes,
    })
}

#[derive(Serialize)]
struct PairReport {
    group: String,
    subgroup: String,
    subgroup_info: crate::groups::SubgroupInfo,
    property: String,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<crate::char_oracle::MultiplicityWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fast_path: Option<String>,
}

fn run_check_pair(inv: &Invocation, group: &str, subgroup: &str, gelfand: bool) -> Result<PairReport> {
    let gd = SubgroupDescriptor::parse(group)?;
    let n = gd.ambient_n();
    let kd = match subgroup {
        "diag" => SubgroupDescriptor::DiagF(n),
        "triv" => SubgroupDescriptor::Trivial(n),
        other => SubgroupDescriptor::parse(other)?,
    };
    if kd.ambient_n() != n {
        return Err(Error::InvalidArgument(format!(
            "subgroup ambient n = {} does not match the group's n = {n}",
            kd.ambient_n()
        )));
    }
    let oracle = oracle_of(inv);
    let g = make_subgroup(&gd, inv.r)?.to_perm_group(inv.budget_elements)?;
    let k_sub = make_subgroup(&kd, inv.r)?;
    let subgroup_info = k_sub.describe(inv.budget_elements)?;
    let k = k_sub.to_perm_group(inv.budget_elements)?;
    if !k.is_subgroup_of(&g) {
        return Err(Error::InvalidArgument(format!("{kd} is not contained in {gd}")));
    }
    let verdict = if gelfand {
        oracle.is_gelfand(&g, &k)?
    } else {
        oracle.is_strong_gelfand(&g, &k)?
    };
    let fast_path = if !gelfand && matches!(gd, SubgroupDescriptor::Full(_)) && inv.r == 2 {
        let fd = family_decision(&kd);
        match fd.verdict {
            Verdict::OutsideFastPath => None,
            Verdict::StrongGelfand => Some(format!("strong Gelfand ({})", fd.source)),
            Verdict::Not => Some(format!("not strong Gelfand ({})", fd.source)),
        }
    } else {
        None
    };
    Ok(PairReport {
        group: gd.to_string(),
        subgroup: kd.to_string(),
        subgroup_info,
        property: if gelfand { "gelfand" } else { "strong-gelfand" }.into(),
        holds: verdict.holds,
        witness: verdict.witness,
        fast_path,
    })
}

#[derive(Serialize)]
struct Table1Report {
    n: u32,
    rows: Vec<Table1Row>,
    notes: Vec<String>,
}

#[derive(Serialize)]
struct Table1Row {
    descriptor: String,
    order: String,
    source: String,
}

fn run_table1(_inv: &Invocation, n: u32) -> Result<Table1Report> {
    let rows = instantiate_table1(n)?;
    let mut out = Vec::with_capacity(rows.len());
    for (decision, sub) in rows {
        let order = sub
            .descriptor
            .as_ref()
            .and_then(|d| d.order_formula(2))
            .map(|o| o.to_string())
            .unwrap_or_else(|| "?".into());
        out.push(Table1Row { descriptor: decision.descriptor, order, source: decision.source });
    }
    let notes = vec![
        "the three Klein-tail fiber rows follow the per-character parity rule: \
         diagonal-kernel characters (chi1) appear at odd n, passive-kernel \
         characters (chi2 ~ chi3, a conjugate pair collapsed to chi2) at even n, \
         and the alternating-kernel head row at every n"
            .to_string(),
        "counts are up to conjugacy; conjugate chi2/chi3 duplicates are collapsed".to_string(),
    ];
    Ok(Table1Report { n, rows: out, notes })
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value)?),
        Format::Csv | Format::Text => println!("{}", text()),
    }
    Ok(())
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Runs a parsed invocation.
pub fn run(inv: Invocation) -> Result<()> {
    match &inv.command {
        Command::Branch { lemma, label, n } => {
            let report = run_branch(lemma, label, *n)?;
            if inv.format == Format::Csv {
                println!("label,mult");
                for row in &report.summands {
                    println!("{},{}", csv_escape(&row.label.to_string()), row.mult);
                }
                return Ok(());
            }
            emit(inv.format, &report, || {
                let mut s = format!(
                    "rule {} on {} -> B_{}:\n",
                    report.lemma, report.label, report.n
                );
                for row in &report.summands {
                    s.push_str(&format!("  {}  x{}\n", row.label, row.mult));
                }
                s
            })
        }
        Command::Mult { w, u, method } => {
            let report = run_mult(&inv, w, u, method)?;
            if inv.format == Format::Csv {
                println!("r,w,u,multiplicity,method");
                println!(
                    "{},{},{},{},{}",
                    report.r,
                    csv_escape(&report.w.to_string()),
                    csv_escape(&format!("{:?}", report.u)),
                    report.multiplicity,
                    report.method
                );
                return Ok(());
            }
            emit(inv.format, &report, || {
                format!(
                    "multiplicity of {:?} in the induction of S^{} from the passive factor (r = {}): {}",
                    report.u, report.w, report.r, report.multiplicity
                )
            })
        }
        Command::Chartable { group } => {
            let report = run_chartable(&inv, group)?;
            match inv.format {
                Format::Json => emit(Format::Json, &report, String::new),
                Format::Csv => {
                    let mut s = String::from("label,degree,values\n");
                    for row in &report.rows {
                        s.push_str(&format!(
                            "{},{},{}\n",
                            csv_escape(row.label.as_deref().unwrap_or("")),
                            row.degree,
                            csv_escape(&format!("{:?}", row.values)),
                        ));
                    }
                    print!("{s}");
                    Ok(())
                }
                Format::Text => {
                    let mut s = format!(
                        "character table of {} (order {}, prime {})\n",
                        report.group, report.order, report.prime
                    );
                    if let Some(classes) = &report.classes {
                        s.push_str(&format!("classes: {}\n", classes.join("  ")));
                    }
                    s.push_str(&format!("class sizes: {:?}\n", report.class_sizes));
                    for row in &report.rows {
                        if let Some(label) = &row.label {
                            s.push_str(&format!("chi^{label:>14}: {:?}\n", row.values));
                        } else {
                            s.push_str(&format!("degree {:>3}: {:?}\n", row.degree, row.values));
                        }
                    }
                    println!("{s}");
                    Ok(())
                }
            }
        }
        Command::CheckPair { group, subgroup, gelfand } => {
            let report = run_check_pair(&inv, group, subgroup, *gelfand)?;
            if inv.format == Format::Csv {
                println!("group,subgroup,property,holds,witness_multiplicity");
                println!(
                    "{},{},{},{},{}",
                    csv_escape(&report.group),
                    csv_escape(&report.subgroup),
                    report.property,
                    report.holds,
                    report
                        .witness
                        .as_ref()
                        .map(|w| w.multiplicity.to_string())
                        .unwrap_or_default()
                );
                return Ok(());
            }
            emit(inv.format, &report, || {
                let mut s = format!(
                    "({}, {}) {}: {}",
                    report.group,
                    report.subgroup,
                    report.property,
                    if report.holds { "holds" } else { "fails" }
                );
                if let Some(w) = &report.witness {
                    s.push_str(&format!(
                        "\n  witness: ambient row {} (degree {}) restricts onto subgroup row {} (degree {}) with multiplicity {}",
                        w.ambient_row, w.ambient_degree, w.sub_row, w.sub_degree, w.multiplicity
                    ));
                }
                if let Some(f) = &report.fast_path {
                    s.push_str(&format!("\n  fast path: {f}"));
                }
                s
            })
        }
        Command::Table1 { n } => {
            let report = run_table1(&inv, *n)?;
            match inv.format {
                Format::Json => emit(Format::Json, &report, String::new),
                Format::Csv => {
                    println!("descriptor,order,source");
                    for row in &report.rows {
                        println!(
                            "{},{},{}",
                            csv_escape(&row.descriptor),
                            row.order,
                            csv_escape(&row.source)
                        );
                    }
                    Ok(())
                }
                Format::Text => {
                    println!("strong Gelfand rows at n = {}:", report.n);
                    for row in &report.rows {
                        println!("  {:40} order {:>12}  [{}]", row.descriptor, row.order, row.source);
                    }
                    for note in &report.notes {
                        println!("note: {note}");
                    }
                    Ok(())
                }
            }
        }
        Command::Classify { n, method } => {
            let method: Method = method.parse()?;
            let oracle = oracle_of(&inv);
            let report = enumerate_strong_gelfand(*n, method, &budgets_of(&inv), &oracle)?;
            match inv.format {
                Format::Json => emit(Format::Json, &report, String::new),
                Format::Csv => {
                    println!("descriptor,order,class_size,strong_gelfand,source");
                    for row in &report.rows {
                        println!(
                            "{},{},{},{},{}",
                            csv_escape(row.descriptor.as_deref().unwrap_or("")),
                            row.order,
                            row.class_size,
                            row.strong_gelfand,
                            csv_escape(&row.source)
                        );
                    }
                    Ok(())
                }
                Format::Text => {
                    println!(
                        "B_{} classification ({:?}, {}):",
                        report.n,
                        report.method,
                        if report.exhaustive {
                            "exhaustive"
                        } else {
                            "fast path only; not exhaustive"
                        }
                    );
                    for row in &report.rows {
                        println!(
                            "  [{}] {:40} order {:>6} x{:<3} {}",
                            if row.strong_gelfand { "SG " } else { "not" },
                            row.descriptor.as_deref().unwrap_or("(unnamed class)"),
                            row.order,
                            row.class_size,
                            row.source
                        );
                    }
                    println!(
                        "counts: {} strong Gelfand classes ({} raw) of {} classes ({} raw)",
                        report.counts.strong_gelfand,
                        report.counts.strong_gelfand_raw,
                        report.counts.total,
                        report.counts.total_raw
                    );
                    Ok(())
                }
            }
        }
        Command::VerifyPaper => {
            let ctx = VerificationCtx::new(oracle_of(&inv), budgets_of(&inv));
            let results = run_all(&ctx, inv.slow);
            for r in &results {
                println!(
                    "[{}] {:>3} {} ({:.2}s): {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.id,
                    r.name,
                    r.seconds,
                    r.detail
                );
            }
            let failures = results.iter().filter(|r| !r.passed).count();
            if failures == 0 {
                Ok(())
            } else {
                Err(Error::Verification(format!(
                    "{failures} of {} checks failed",
                    results.len()
                )))
            }
        }
    }
}

/// Program entry: parse, run, map errors to exit codes and a JSON
/// diagnostic on stderr.
pub fn main_entry() -> i32 {
    let inv = Invocation::parse();
    match run(inv) {
        Ok(()) => 0,
        Err(e) => {
            let code = e.exit_code();
            let diag = serde_json::json!({
                "error": e.to_string(),
                "exit_code": code,
            });
            let _ = writeln!(std::io::stderr(), "{diag}");
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_parsing() {
        assert_eq!(parse_partition("[3,2,1]").unwrap().parts(), &[3, 2, 1]);
        assert!(parse_partition("[]").unwrap().is_empty());
        assert!(parse_partition("[1,2]").is_err());
        let l = parse_partition_list("[],[1]").unwrap();
        assert_eq!(l.len(), 2);
        assert!(l[0].is_empty());
    }

    #[test]
    fn branch_cli_example() {
        let report = run_branch("L2.5", "[],[1]", Some(3)).unwrap();
        assert_eq!(report.summands.len(), 2);
        assert!(run_branch("L2.5", "[],[1]", Some(4)).is_err());
        assert!(run_branch("L9.9", "[],[1]", None).is_err());
    }
}
