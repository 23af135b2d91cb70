use std::path::Path;

use graphpot_core::grothendieck::{zeta_identity_checks, moduli_class, Basis, Check, K0Class};
use graphpot_core::measures::{
    betti, count_curve, count_realize, dg_multiplicity, e_realize, functional_equation_holds, CountReport, CurveData,
    CurveFixture, MeasureError,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::args::GenusRange;
use crate::report::{csv_table, status, to_json, CliError, Report};

fn to_i64(c: &BigInt) -> i64 {
    i64::try_from(c).expect("realization coefficients fit in i64 at supported genera")
}

#[derive(Debug, Serialize)]
pub struct BettiEntry {
    genus: usize,
    coefficients: Vec<i64>,
    polynomial: String,
}

#[derive(Debug, Serialize)]
pub struct BettiReport {
    command: &'static str,
    measure: &'static str,
    genera: Vec<BettiEntry>,
}

impl Report for BettiReport {
    fn json(&self) -> String {
        to_json(self)
    }

    fn text(&self) -> String {
        let line = |e: &BettiEntry| e.coefficients.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self.genera.as_slice() {
            [one] => format!("{}\n", line(one)),
            many => many.iter().map(|e| format!("g={}: {}\n", e.genus, line(e))).collect(),
        }
    }

    fn csv(&self) -> String {
        csv_table(
            &["genus", "degree", "coefficient"],
            self.genera.iter().flat_map(|e| {
                e.coefficients.iter().enumerate().map(move |(d, c)| vec![e.genus.to_string(), d.to_string(), c.to_string()])
            }),
        )
    }

    fn passed(&self) -> bool {
        true
    }
}

fn measure_err(e: MeasureError) -> CliError {
    match e {
        MeasureError::RouteMismatch { .. } | MeasureError::NonIntegral(_) => CliError::Checkpoint(e.to_string()),
        other => CliError::usage(other),
    }
}

fn class(g: usize) -> Result<K0Class, CliError> {
    moduli_class(g).map_err(|e| CliError::Checkpoint(e.to_string()))
}

pub fn run_betti(genus: &GenusRange) -> Result<BettiReport, CliError> {
    let genera = genus
        .iter()
        .map(|g| {
            let b = betti(&class(g)?, g).map_err(measure_err)?;
            Ok(BettiEntry { genus: g, coefficients: b.coeffs().iter().map(to_i64).collect(), polynomial: b.to_string() })
        })
        .collect::<Result<_, CliError>>()?;
    Ok(BettiReport { command: "measure", measure: "betti", genera })
}

#[derive(Debug, Serialize)]
pub struct PolyEntry {
    genus: usize,
    polynomial: String,
}

#[derive(Debug, Serialize)]
pub struct HodgeReport {
    command: &'static str,
    measure: &'static str,
    genera: Vec<PolyEntry>,
}

impl Report for HodgeReport {
    fn json(&self) -> String {
        to_json(self)
    }

    fn text(&self) -> String {
        self.genera.iter().map(|e| format!("g={}: {}\n", e.genus, e.polynomial)).collect()
    }

    fn csv(&self) -> String {
        csv_table(&["genus", "polynomial"], self.genera.iter().map(|e| vec![e.genus.to_string(), e.polynomial.clone()]))
    }

    fn passed(&self) -> bool {
        true
    }
}

pub fn run_hodge(genus: &GenusRange) -> Result<HodgeReport, CliError> {
    let genera = genus
        .iter()
        .map(|g| Ok(PolyEntry { genus: g, polynomial: e_realize(&class(g)?, g).map_err(measure_err)?.to_string() }))
        .collect::<Result<_, CliError>>()?;
    Ok(HodgeReport { command: "measure", measure: "hodge", genera })
}

#[derive(Debug, Serialize)]
pub struct Block {
    block: String,
    multiplicity: String,
}

#[derive(Debug, Serialize)]
pub struct BlockEntry {
    genus: usize,
    blocks: Vec<Block>,
    total: String,
    expected_total: usize,
    /// `SYM(g−1)` once and every lower `SYM(i)` twice.
    expected_pattern: bool,
}

#[derive(Debug, Serialize)]
pub struct DgReport {
    command: &'static str,
    measure: &'static str,
    genera: Vec<BlockEntry>,
    passed: bool,
}

impl Report for DgReport {
    fn json(&self) -> String {
        to_json(self)
    }

    fn text(&self) -> String {
        self.genera
            .iter()
            .map(|e| {
                let parts: Vec<String> = e.blocks.iter().map(|b| format!("{} x{}", b.block, b.multiplicity)).collect();
                format!("g={}: {} (total {}, expected {})\n", e.genus, parts.join(", "), e.total, e.expected_total)
            })
            .collect()
    }

    fn csv(&self) -> String {
        csv_table(
            &["genus", "block", "multiplicity"],
            self.genera.iter().flat_map(|e| e.blocks.iter().map(move |b| vec![e.genus.to_string(), b.block.clone(), b.multiplicity.clone()])),
        )
    }

    fn passed(&self) -> bool {
        self.passed
    }
}

pub fn run_dg(genus: &GenusRange) -> Result<DgReport, CliError> {
    let genera: Vec<BlockEntry> = genus
        .iter()
        .map(|g| {
            let m = dg_multiplicity(&class(g)?).map_err(measure_err)?;
            let total = m.values().fold(BigRational::from_integer(0.into()), |a, v| a + v);
            let pattern = m.len() == g
                && m.iter().all(|(b, v)| match b {
                    Basis::Sym(i) if *i + 1 == g => *v == BigRational::from_integer(1.into()),
                    Basis::Sym(i) if *i + 1 < g => *v == BigRational::from_integer(2.into()),
                    _ => false,
                });
            Ok(BlockEntry {
                genus: g,
                blocks: m.iter().rev().map(|(b, v)| Block { block: b.to_string(), multiplicity: v.to_string() }).collect(),
                total: total.to_string(),
                expected_total: 2 * g - 1,
                expected_pattern: pattern,
            })
        })
        .collect::<Result<_, CliError>>()?;
    let passed = genera.iter().all(|e| e.expected_pattern && e.total == e.expected_total.to_string());
    Ok(DgReport { command: "measure", measure: "dg", genera, passed })
}

pub fn load_curve(path: &Path) -> Result<CurveData, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let fixture: CurveFixture =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    count_curve(&fixture).map_err(measure_err)
}

#[derive(Debug, Serialize)]
pub struct CountOutput {
    command: &'static str,
    measure: &'static str,
    curve: CurveData,
    functional_equation: bool,
    count: CountReport,
    passed: bool,
}

impl Report for CountOutput {
    fn json(&self) -> String {
        to_json(self)
    }

    fn text(&self) -> String {
        format!(
            "{}\ncurve over F_{}: genus {}, point counts {:?}, zeta numerator {}\n{} functional equation\n{} routes agree: class {} = formula {}\n",
            self.count.by_class,
            self.curve.q,
            self.curve.genus,
            self.curve.counts,
            numerator_string(&self.curve.numerator),
            status(self.functional_equation),
            status(self.count.by_class == self.count.by_formula),
            self.count.by_class,
            self.count.by_formula,
        )
    }

    fn csv(&self) -> String {
        csv_table(
            &["q", "genus", "by_class", "by_formula", "jac_count", "functional_equation"],
            [vec![
                self.count.q.to_string(),
                self.count.genus.to_string(),
                self.count.by_class.to_string(),
                self.count.by_formula.to_string(),
                self.count.jac_count.to_string(),
                self.functional_equation.to_string(),
            ]],
        )
    }

    fn passed(&self) -> bool {
        self.passed
    }
}

pub fn numerator_string(p: &[BigInt]) -> String {
    p.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn run_count(path: &Path) -> Result<CountOutput, CliError> {
    let curve = load_curve(path)?;
    let fe = functional_equation_holds(&curve.numerator, curve.genus, &BigInt::from(curve.q), &BigInt::from(1));
    let count = count_realize(&class(curve.genus)?, &curve).map_err(measure_err)?;
    let passed = fe && count.by_class == count.by_formula && count.by_class > BigInt::from(0);
    Ok(CountOutput { command: "measure", measure: "count", curve, functional_equation: fe, count, passed })
}

#[derive(Debug, Serialize)]
pub struct ZetaGenus {
    genus: usize,
    zeta_at_l: String,
    checks: Vec<Check>,
}

#[derive(Debug, Serialize)]
pub struct ZetaReport {
    command: &'static str,
    genera: Vec<ZetaGenus>,
    curve: Option<CurveData>,
    passed: bool,
}

impl Report for ZetaReport {
    fn json(&self) -> String {
        to_json(self)
    }

    fn text(&self) -> String {
        let mut s = String::new();
        for g in &self.genera {
            s += &format!("g={}: Z(L) = {}\n", g.genus, g.zeta_at_l);
            for c in &g.checks {
                s += &format!("g={} {} {}\n", g.genus, status(c.status), c.name);
            }
        }
        if let Some(c) = &self.curve {
            s += &format!("P(t) = {} over F_{}, counts {:?}\n", numerator_string(&c.numerator), c.q, c.counts);
            s += &format!("{} functional equation\n", status(self.passed));
        }
        s
    }

    fn csv(&self) -> String {
        if let Some(c) = &self.curve {
            return csv_table(
                &["q", "genus", "numerator", "functional_equation"],
                [vec![c.q.to_string(), c.genus.to_string(), numerator_string(&c.numerator), self.passed.to_string()]],
            );
        }
        csv_table(
            &["genus", "check", "status", "detail"],
            self.genera.iter().flat_map(|g| {
                g.checks.iter().map(|c| vec![g.genus.to_string(), c.name.clone(), c.status.to_string(), c.detail.clone()])
            }),
        )
    }

    fn passed(&self) -> bool {
        self.passed
    }
}

pub fn run_zeta_genus(genus: &GenusRange) -> Result<ZetaReport, CliError> {
    let genera: Vec<ZetaGenus> = genus
        .iter()
        .map(|g| {
            let k = zeta_identity_checks(g).map_err(|e| CliError::Checkpoint(e.to_string()))?;
            Ok(ZetaGenus { genus: g, zeta_at_l: k.zeta_at_l.to_string(), checks: k.checks })
        })
        .collect::<Result<_, CliError>>()?;
    let passed = genera.iter().all(|g| g.checks.iter().all(|c| c.status));
    Ok(ZetaReport { command: "zeta", genera, curve: None, passed })
}

pub fn run_zeta_curve(path: &Path) -> Result<ZetaReport, CliError> {
    let curve = load_curve(path)?;
    let fe = functional_equation_holds(&curve.numerator, curve.genus, &BigInt::from(curve.q), &BigInt::from(1));
    Ok(ZetaReport { command: "zeta", genera: Vec::new(), curve: Some(curve), passed: fe })
}
