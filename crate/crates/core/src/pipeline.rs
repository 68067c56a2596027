//! End-to-end pipeline: analysis, diagram, labels, complex, verification.

use serde::{Deserialize, Serialize};

use crate::bbw::{label_diagram, LabeledDiagram};
use crate::complex::{
    assemble, diamond_violations, jump_label_violations, oracle_check, shift_check,
    SingularComplex,
};
use crate::error::Result;
use crate::hasse::build_relative_hasse;
use crate::report::JsonReport;
use crate::weights::{analyze_singularity, SingularityProfile, Weight};

/// The full computation for one `(mu, k)` input.
#[derive(Debug, Clone)]
pub struct Pipeline {
    pub mu: Weight,
    pub profile: SingularityProfile,
    pub labeled: LabeledDiagram,
    pub complex: SingularComplex,
}

impl Pipeline {
    pub fn run(mu: Weight, k: usize) -> Result<Pipeline> {
        let profile = analyze_singularity(&mu, k)?;
        let labeled = label_diagram(build_relative_hasse(&profile)?);
        let complex = assemble(&labeled, &profile)?;
        Ok(Pipeline {
            mu,
            profile,
            labeled,
            complex,
        })
    }

    /// Runs the structural suite: oracle isomorphism, shift law, jump-label
    /// law and diamond pairing.
    pub fn verify(&self) -> Result<VerificationReport> {
        let oracle = oracle_check(&self.complex, &self.profile)?;
        let (shift_ok, min_p_plus_q) = shift_check(&self.labeled, &self.profile);
        let jump_failures = jump_label_violations(&self.complex);
        let diamond_failures = diamond_violations(&self.complex);

        let mut failures = oracle.mismatches.clone();
        if !shift_ok {
            failures.push(format!(
                "min p+q = {min_p_plus_q}, expected {}",
                self.profile.order() * self.profile.a()
            ));
        }
        failures.extend(jump_failures.iter().cloned());
        failures.extend(diamond_failures.iter().cloned());

        Ok(VerificationReport {
            oracle_ok: oracle.ok,
            shift_ok,
            min_p_plus_q,
            expected_shift: self.profile.order() * self.profile.a(),
            jump_law_ok: jump_failures.is_empty(),
            diamond_ok: diamond_failures.is_empty(),
            failures,
        })
    }

    pub fn json_report(&self) -> JsonReport {
        JsonReport::new(&self.mu, &self.profile)
            .with_relative(&self.labeled)
            .with_complex(&self.complex)
    }
}

/// Aggregate verdict of the verification suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub oracle_ok: bool,
    pub shift_ok: bool,
    pub min_p_plus_q: usize,
    pub expected_shift: usize,
    pub jump_law_ok: bool,
    pub diamond_ok: bool,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        let flag = |ok: bool| if ok { "OK" } else { "FAIL" };
        format!(
            "oracle isomorphism {}, shift {} (min p+q={}), jump law {}, diamonds {}",
            flag(self.oracle_ok),
            flag(self.shift_ok),
            self.min_p_plus_q,
            flag(self.jump_law_ok),
            flag(self.diamond_ok),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_passes_on_worked_instance() {
        let p = Pipeline::run(Weight::new(vec![5, 4, 4, 3, 2, 1, 1, 0]).unwrap(), 4).unwrap();
        let report = p.verify().unwrap();
        assert!(report.ok(), "failures: {:?}", report.failures);
        assert_eq!(report.min_p_plus_q, 4);
        assert_eq!(
            report.summary(),
            "oracle isomorphism OK, shift OK (min p+q=4), jump law OK, diamonds OK"
        );
    }
}
