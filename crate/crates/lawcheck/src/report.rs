use std::fmt::{self, Display};
use std::str::FromStr;
use std::time::Duration;

/// Witnesses kept per report; further failures are only counted.
pub const MAX_WITNESSES: usize = 8;

/// A failed instance: the inputs, and the two sides that should have agreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Which part of the check failed (a sub-law or a table cell).
    pub context: String,
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Violation {
    pub fn new(context: &str, inputs: &[&dyn Display], lhs: impl Display, rhs: impl Display) -> Violation {
        Violation {
            context: context.to_string(),
            inputs: inputs.iter().map(|x| x.to_string()).collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

impl Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "witness [{}] inputs={} lhs={} rhs={}", self.context, self.inputs.join(" ; "), self.lhs, self.rhs)
    }
}

/// Instantiation count of one table cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellStat {
    pub name: String,
    pub count: usize,
    pub failures: usize,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub law: String,
    pub samples: usize,
    pub failures: usize,
    pub violations: Vec<Violation>,
    pub vacuous: Vec<String>,
    pub cells: Vec<CellStat>,
    pub elapsed: Duration,
}

/// Equality ignores `elapsed`.
impl PartialEq for Report {
    fn eq(&self, o: &Self) -> bool {
        self.law == o.law
            && self.samples == o.samples
            && self.failures == o.failures
            && self.violations == o.violations
            && self.vacuous == o.vacuous
            && self.cells == o.cells
    }
}

impl Eq for Report {}

impl Report {
    pub fn new(law: &str) -> Report {
        Report {
            law: law.to_string(),
            samples: 0,
            failures: 0,
            violations: Vec::new(),
            vacuous: Vec::new(),
            cells: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn sample(&mut self) {
        self.samples += 1;
    }

    pub fn expect(&mut self, ok: bool, witness: impl FnOnce() -> Violation) {
        if !ok {
            self.fail(witness());
        }
    }

    pub fn fail(&mut self, v: Violation) {
        self.failures += 1;
        if self.violations.len() < MAX_WITNESSES {
            self.violations.push(v);
        }
    }

    pub fn cell(&self, name: &str) -> Option<&CellStat> {
        self.cells.iter().find(|c| c.name == name)
    }

    /// Combine reports of the same law over disjoint samples.
    pub fn merge(mut self, other: Report) -> Report {
        self.samples += other.samples;
        self.failures += other.failures;
        for v in other.violations {
            if self.violations.len() < MAX_WITNESSES {
                self.violations.push(v);
            }
        }
        for c in other.cells {
            match self.cells.iter_mut().find(|d| d.name == c.name) {
                Some(d) => {
                    d.count += c.count;
                    d.failures += c.failures;
                }
                None => self.cells.push(c),
            }
        }
        let cells = &self.cells;
        self.vacuous.extend(other.vacuous);
        self.vacuous.sort();
        self.vacuous.dedup();
        self.vacuous.retain(|v| cells.iter().all(|c| c.name != *v || c.count == 0));
        self.elapsed += other.elapsed;
        self
    }

    /// `LAW <id> PASS|FAIL samples=<n> vacuous=<cells>`, followed on failure
    /// by the first witness.
    pub fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let vac = if self.vacuous.is_empty() { "-".to_string() } else { self.vacuous.join(",") };
        let mut s = format!("LAW {} {} samples={} vacuous={}", self.law, status, self.samples, vac);
        if let Some(v) = self.violations.first() {
            s.push_str(&format!("\n  {v}"));
        }
        s
    }

    /// Tab-separated rows: one per cell, or a single row without cells.
    pub fn tsv(&self) -> String {
        let status = |f: usize, n: usize| {
            if n == 0 {
                "VACUOUS"
            } else if f == 0 {
                "PASS"
            } else {
                "FAIL"
            }
        };
        if self.cells.is_empty() {
            return format!(
                "{}\t-\t{}\t{}\t{}",
                self.law,
                self.samples,
                self.failures,
                status(self.failures, self.samples.max(1))
            );
        }
        self.cells
            .iter()
            .map(|c| format!("{}\t{}\t{}\t{}\t{}", self.law, c.name, c.count, c.failures, status(c.failures, c.count)))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Tsv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "text" => Ok(Format::Text),
            "tsv" => Ok(Format::Tsv),
            _ => Err(format!("unknown format {s:?}, expected text or tsv")),
        }
    }
}

pub fn render(reports: &[Report], format: Format) -> String {
    let mut out = String::new();
    if format == Format::Tsv {
        out.push_str("law\tcell\tcount\tfailures\tstatus\n");
    }
    for r in reports {
        out.push_str(&match format {
            Format::Text => r.line(),
            Format::Tsv => r.tsv(),
        });
        out.push('\n');
    }
    out
}
