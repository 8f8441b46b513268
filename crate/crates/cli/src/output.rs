//! Output records and their two renderings.

use std::fmt::Write as _;

use gbdepth::family::{ExplorationSummary, VerificationReport};
use gbdepth::monomial_invariants::{BettiEntry, IntPoly};
use gbdepth::{BettiTable, Monomial};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct GbOutput {
    pub command: &'static str,
    pub field: String,
    pub nvars: usize,
    pub order: String,
    pub gb_size: usize,
    pub basis: Vec<String>,
    pub verified: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct InitialOutput {
    pub command: &'static str,
    pub field: String,
    pub nvars: usize,
    pub order: String,
    pub gb_size: usize,
    pub initial_ideal: Vec<String>,
    pub squarefree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantsOutput {
    pub command: &'static str,
    pub field: String,
    pub nvars: usize,
    /// `monomial` for direct input, `initial` when taken from a Gröbner basis.
    pub source: &'static str,
    pub order: Option<String>,
    pub ideal: Vec<String>,
    pub dim: usize,
    pub depth: usize,
    pub pd: usize,
    pub reg: i64,
    pub cohen_macaulay: bool,
    /// Coefficients, constant term first.
    pub hilbert_numerator: Vec<i64>,
    pub betti: Vec<BettiEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunFailureOut {
    pub r: usize,
    pub budget: bool,
    pub error: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyOutput {
    pub command: &'static str,
    pub field: String,
    pub d: usize,
    pub reports: Vec<VerificationReport>,
    pub failures: Vec<RunFailureOut>,
    pub pass: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct KnownInvariants {
    pub depth: usize,
    pub reg: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExploreOutput {
    pub command: &'static str,
    pub field: String,
    pub input: String,
    pub nvars: usize,
    pub min_depth: Option<usize>,
    pub max_reg: Option<i64>,
    /// Depth and regularity of the input quotient, when known.
    pub known: Option<KnownInvariants>,
    /// Sample indices of records breaking `depth <= known.depth` or `reg >= known.reg`.
    pub violations: Vec<usize>,
    pub summary: ExplorationSummary,
}

#[derive(Debug, Clone, Serialize)]
pub struct HibiOutput {
    pub command: &'static str,
    pub field: String,
    pub lattice: String,
    /// Element `k` is the variable `x{k+1}`.
    pub elements: Vec<String>,
    pub nvars: usize,
    pub generators: Vec<String>,
    pub min_depth: Option<usize>,
    pub exploration: Option<ExplorationSummary>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Output {
    Gb(GbOutput),
    Initial(InitialOutput),
    Invariants(InvariantsOutput),
    Verify(VerifyOutput),
    Explore(ExploreOutput),
    Hibi(HibiOutput),
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn column_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for r in rows {
        line(r.iter().map(String::as_str).collect());
    }
    out
}

impl Output {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("output records serialize");
        s.push('\n');
        s
    }

    pub fn to_table(&self, verbose: bool) -> String {
        match self {
            Output::Gb(o) => {
                let mut s = format!("order: {}\nbasis ({} elements):\n", o.order, o.gb_size);
                for g in &o.basis {
                    let _ = writeln!(s, "  {g}");
                }
                s
            }
            Output::Initial(o) => {
                let mut s = format!("order: {}\ninitial ideal ({} generators):\n", o.order, o.initial_ideal.len());
                for g in &o.initial_ideal {
                    let _ = writeln!(s, "  {g}");
                }
                let _ = writeln!(s, "squarefree: {}", yes_no(o.squarefree));
                s
            }
            Output::Invariants(o) => {
                let mut s = String::new();
                if let Some(order) = &o.order {
                    let _ = writeln!(s, "initial ideal under {order}");
                }
                let _ = writeln!(s, "ideal: ({})", o.ideal.join(", "));
                let _ = writeln!(s, "n      {}", o.nvars);
                let _ = writeln!(s, "dim    {}", o.dim);
                let _ = writeln!(s, "depth  {}", o.depth);
                let _ = writeln!(s, "pd     {}", o.pd);
                let _ = writeln!(s, "reg    {}", o.reg);
                let _ = writeln!(s, "CM     {}", yes_no(o.cohen_macaulay));
                let _ = writeln!(s, "Hilbert numerator: {}", IntPoly::new(o.hilbert_numerator.clone()));
                let table = BettiTable::from_entries(
                    o.nvars,
                    o.betti.iter().map(|e| ((e.i, Monomial::new(e.multidegree.clone())), e.multiplicity)),
                );
                s.push_str("Betti table:\n");
                s.push_str(&table.render());
                s
            }
            Output::Verify(o) => render_verify(o, verbose),
            Output::Explore(o) => {
                let mut s = format!(
                    "explore {}: {} samples, seed {}, weights in 1..={}\n",
                    o.input, o.summary.samples, o.summary.seed, o.summary.weight_bound
                );
                let rows: Vec<Vec<String>> = o
                    .summary
                    .records
                    .iter()
                    .map(|r| {
                        vec![
                            r.sample.to_string(),
                            r.weights.iter().map(i64::to_string).collect::<Vec<_>>().join(","),
                            r.hits.to_string(),
                            r.dim.to_string(),
                            r.depth.to_string(),
                            r.reg.to_string(),
                            yes_no(r.squarefree).to_string(),
                        ]
                    })
                    .collect();
                s.push_str(&column_table(&["sample", "weights", "hits", "dim", "depth", "reg", "squarefree"], &rows));
                if verbose {
                    for r in &o.summary.records {
                        let _ = writeln!(s, "sample {}: ({})", r.sample, r.initial_ideal.join(", "));
                    }
                }
                let _ = writeln!(s, "distinct initial ideals: {}", o.summary.records.len());
                if let (Some(d), Some(r)) = (o.min_depth, o.max_reg) {
                    let _ = writeln!(s, "min depth {d}, max reg {r}");
                }
                for k in &o.summary.skipped {
                    let _ = writeln!(s, "skipped sample {}: {}", k.sample, k.reason);
                }
                if let Some(k) = &o.known {
                    let _ = writeln!(
                        s,
                        "semicontinuity (depth <= {}, reg >= {}): {}",
                        k.depth,
                        k.reg,
                        if o.violations.is_empty() { "ok".to_string() } else { format!("violated at {:?}", o.violations) }
                    );
                }
                s
            }
            Output::Hibi(o) => {
                let mut s = format!("lattice {} with {} elements\n", o.lattice, o.elements.len());
                for (k, name) in o.elements.iter().enumerate() {
                    let _ = writeln!(s, "  x{} = {name}", k + 1);
                }
                let _ = writeln!(s, "binomials ({}):", o.generators.len());
                for g in &o.generators {
                    let _ = writeln!(s, "  {g}");
                }
                if let Some(e) = &o.exploration {
                    let depths: Vec<String> = e.records.iter().map(|r| r.depth.to_string()).collect();
                    let _ = writeln!(
                        s,
                        "{} samples: {} initial ideals, depths [{}]",
                        e.samples,
                        e.records.len(),
                        depths.join(", ")
                    );
                }
                if let Some(m) = o.min_depth {
                    let _ = writeln!(s, "min depth {m}");
                }
                s
            }
        }
    }
}

fn expect_cell<T: PartialEq + std::fmt::Display>(got: T, want: T) -> String {
    if got == want {
        got.to_string()
    } else {
        format!("{got} (want {want})")
    }
}

fn render_verify(o: &VerifyOutput, verbose: bool) -> String {
    let mut s = format!("d = {}, field {}\n", o.d, o.field);
    let rows: Vec<Vec<String>> = o
        .reports
        .iter()
        .map(|r| {
            vec![
                r.r.to_string(),
                r.gb_size.to_string(),
                yes_no(r.gb_confirmed && r.gb_matches_claimed).to_string(),
                yes_no(r.claimed_set_confirmed).to_string(),
                yes_no(r.initial_matches_expected).to_string(),
                expect_cell(r.dim, r.expected_dim),
                expect_cell(r.depth, r.expected_depth),
                expect_cell(r.reg, r.expected_reg),
                match r.reg_original {
                    Some(v) => expect_cell(v, r.expected_reg_original),
                    None => "-".into(),
                },
                if r.pass { "PASS" } else { "FAIL" }.to_string(),
            ]
        })
        .collect();
    s.push_str(&column_table(
        &["r", "gb_size", "gb", "claimed", "initial", "dim", "depth", "reg", "reg(S/I)", "result"],
        &rows,
    ));
    for r in &o.reports {
        if let Some(w) = &r.claimed_witness {
            let _ = writeln!(s, "r={}: claimed basis refuted: {w}", r.r);
        }
        if let Some(l) = &r.literal_check {
            match &l.witness {
                Some(w) if !l.confirmed => {
                    let _ = writeln!(s, "r={}: --paper-literal basis refuted: {w}", r.r);
                }
                _ => {
                    let _ = writeln!(s, "r={}: --paper-literal basis confirmed", r.r);
                }
            }
        }
        if r.direct_agrees == Some(false) {
            let _ = writeln!(s, "r={}: unsplit Betti table disagrees", r.r);
        }
    }
    for f in &o.failures {
        let _ = writeln!(s, "r={}: not finished: {}", f.r, f.error);
    }
    if verbose {
        for r in &o.reports {
            let _ = writeln!(s, "\nr={} order {}", r.r, r.order);
            let _ = writeln!(s, "  basis: {}", r.gb.join(", "));
            let _ = writeln!(s, "  initial ideal: ({})", r.initial_ideal.join(", "));
            let _ = writeln!(s, "  Hilbert numerator: {}", r.hilbert_numerator);
            if let Some(h) = &r.h_polynomial {
                let _ = writeln!(s, "  h-polynomial: {h} (want {})", r.expected_h_polynomial);
            }
            if let Some(agree) = r.direct_agrees {
                let _ = writeln!(s, "  unsplit Betti table agrees: {}", yes_no(agree));
            }
        }
        s.push('\n');
        for n in &o.notes {
            let _ = writeln!(s, "note: {n}");
        }
    }
    let _ = writeln!(s, "{}", if o.pass { "all orders pass" } else { "verification FAILED" });
    s
}
