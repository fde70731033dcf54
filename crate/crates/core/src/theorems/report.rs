use std::fmt;

use serde::Serialize;

/// The statement a report checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// `D(G□H) <= D(G⊠H) <= min{D(G)|V(H)|, |V(G)|D(H)}` with the layer
    /// labelings executed.
    ProductSandwich,
    /// `Aut(G⊠H) = Aut(G□H)` and `D(G⊠H) = D(G□H)` for S-thin primes.
    StrongCartesianEquality,
    /// `D` of the k-th strong power of a connected S-thin graph is 2.
    StrongPowerNumber,
    /// Layer sequences give a distinguishing labeling within the bound.
    SequenceLabeling,
    /// Lifting a distinguishing edge labeling of `G□H` to `G⊠H`.
    EdgeLift,
    /// `D′(G⊠H) <= D′(G□H) + 1`.
    IndexSpanningBound,
    /// `D′(G⊠H) <= D′(G□H)` for S-thin primes.
    IndexThinBound,
    /// `D′` of strong products of paths and cycles.
    PathCycleIndex,
    /// `D′` of the k-th strong power of a connected S-thin graph is 2.
    StrongPowerIndex,
    /// Products of Δ factors of maximum degree at most Δ and order at least
    /// 7 are traceable with `D′ <= 2`.
    TraceableIndex,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::ProductSandwich => "product-sandwich",
            Check::StrongCartesianEquality => "strong-cartesian-equality",
            Check::StrongPowerNumber => "strong-power-number",
            Check::SequenceLabeling => "sequence-labeling",
            Check::EdgeLift => "edge-lift",
            Check::IndexSpanningBound => "index-spanning-bound",
            Check::IndexThinBound => "index-thin-bound",
            Check::PathCycleIndex => "path-cycle-index",
            Check::StrongPowerIndex => "strong-power-index",
            Check::TraceableIndex => "traceable-index",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    /// Hypotheses held and a claim is false.
    Fail,
    /// Some hypothesis does not hold; nothing is claimed.
    NotApplicable,
    /// A budget was hit or bounds were too loose to decide.
    Inconclusive,
}

impl Verdict {
    pub fn tag(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "N/A",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub held: bool,
}

/// A computed integer, known to lie in `lo..=hi`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quantity {
    pub name: String,
    pub lo: usize,
    pub hi: usize,
}

impl Quantity {
    pub fn exact(name: impl Into<String>, value: usize) -> Self {
        Quantity {
            name: name.into(),
            lo: value,
            hi: value,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}={}", self.name, self.lo)
        } else {
            write!(f, "{}∈[{},{}]", self.name, self.lo, self.hi)
        }
    }
}

/// A claim whose truth is decided from interval bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub statement: String,
    /// `None` when the bounds cannot decide it.
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub check: Check,
    pub instance: String,
    pub orders: Vec<usize>,
    pub hypotheses: Vec<Hypothesis>,
    pub quantities: Vec<Quantity>,
    pub claims: Vec<Claim>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
    /// Labels of a constructive witness: per vertex, or per edge in sorted
    /// edge order.
    pub witness: Option<Vec<usize>>,
}

impl BoundReport {
    pub fn quantity(&self, name: &str) -> Option<&Quantity> {
        self.quantities.iter().find(|q| q.name == name)
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} {}",
            self.verdict.tag(),
            self.check.name(),
            self.instance
        )?;
        let failed: Vec<&str> = self
            .hypotheses
            .iter()
            .filter(|h| !h.held)
            .map(|h| h.name.as_str())
            .collect();
        if !failed.is_empty() {
            write!(f, " (hypothesis failed: {})", failed.join(", "))?;
        }
        for q in &self.quantities {
            write!(f, " {q}")?;
        }
        for n in &self.notes {
            write!(f, "; {n}")?;
        }
        Ok(())
    }
}

/// Accumulates a report and derives its verdict.
pub(crate) struct ReportBuilder {
    report: BoundReport,
    error: bool,
}

impl ReportBuilder {
    pub fn new(check: Check, instance: impl Into<String>, orders: Vec<usize>) -> Self {
        ReportBuilder {
            report: BoundReport {
                check,
                instance: instance.into(),
                orders,
                hypotheses: Vec::new(),
                quantities: Vec::new(),
                claims: Vec::new(),
                verdict: Verdict::Inconclusive,
                notes: Vec::new(),
                witness: None,
            },
            error: false,
        }
    }

    pub fn hypothesis(&mut self, name: impl Into<String>, held: bool) -> bool {
        self.report.hypotheses.push(Hypothesis {
            name: name.into(),
            held,
        });
        held
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.report.hypotheses.iter().all(|h| h.held)
    }

    pub fn quantity(&mut self, q: Quantity) {
        self.report.quantities.push(q);
    }

    pub fn claim(&mut self, statement: impl Into<String>, holds: Option<bool>) {
        self.report.claims.push(Claim {
            statement: statement.into(),
            holds,
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.report.notes.push(note.into());
    }

    pub fn witness(&mut self, labels: Vec<usize>) {
        self.report.witness = Some(labels);
    }

    /// Records a computation that could not finish.
    pub fn error(&mut self, e: impl fmt::Display) {
        self.error = true;
        self.report.notes.push(e.to_string());
    }

    pub fn finish(mut self) -> BoundReport {
        let claims = &self.report.claims;
        self.report.verdict = if !self.hypotheses_hold() {
            Verdict::NotApplicable
        } else if claims.iter().any(|c| c.holds == Some(false)) {
            Verdict::Fail
        } else if self.error || claims.is_empty() || claims.iter().any(|c| c.holds.is_none()) {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        };
        self.report
    }
}

/// `a <= b` decided from bounds.
pub(crate) fn le(a: &Quantity, b: &Quantity) -> Option<bool> {
    if a.hi <= b.lo {
        Some(true)
    } else if a.lo > b.hi {
        Some(false)
    } else {
        None
    }
}

/// `a == b` decided from bounds.
pub(crate) fn eq(a: &Quantity, b: &Quantity) -> Option<bool> {
    if a.is_exact() && b.is_exact() {
        Some(a.lo == b.lo)
    } else if a.hi < b.lo || b.hi < a.lo {
        Some(false)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(lo: usize, hi: usize) -> Quantity {
        Quantity {
            name: "x".into(),
            lo,
            hi,
        }
    }

    #[test]
    fn interval_comparisons() {
        assert_eq!(le(&q(2, 2), &q(2, 3)), Some(true));
        assert_eq!(le(&q(2, 3), &q(2, 3)), None);
        assert_eq!(le(&q(4, 5), &q(2, 3)), Some(false));
        assert_eq!(eq(&q(2, 2), &q(2, 2)), Some(true));
        assert_eq!(eq(&q(2, 2), &q(3, 4)), Some(false));
        assert_eq!(eq(&q(2, 3), &q(3, 3)), None);
    }

    #[test]
    fn hypothesis_failure_is_not_a_failure() {
        let mut b = ReportBuilder::new(Check::StrongPowerNumber, "K2^2", vec![2]);
        b.hypothesis("S-thin", false);
        b.claim("D = 2", Some(false));
        assert_eq!(b.finish().verdict, Verdict::NotApplicable);
        let mut b = ReportBuilder::new(Check::StrongPowerNumber, "P3^2", vec![3]);
        b.hypothesis("S-thin", true);
        b.claim("D = 2", Some(false));
        assert_eq!(b.finish().verdict, Verdict::Fail);
        let mut b = ReportBuilder::new(Check::StrongPowerNumber, "P3^2", vec![3]);
        b.claim("D = 2", None);
        assert_eq!(b.finish().verdict, Verdict::Inconclusive);
    }
}
