// Reduce orbifolds with mirrors, punctures and non-orientable surfaces to a
// closed orientable cone-only orbifold, step by step.

use std::error::Error;

use orbifold::reduce::StepKind;
use orbifold::{reduce_to_closed, Signature};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for text in [
        "N;g=1;bdry=r(4)",
        "O;g=0;pun=2;cones=3",
        "N;g=2;bdry=m",
        "O;g=1;bdry=r(2,3),m",
    ] {
        let sig: Signature = text.parse()?;
        let trace = reduce_to_closed(&sig);
        println!("{} (euler {})", sig, sig.orbifold_euler());
        for r in trace.records() {
            println!(
                "  {:?} [{:?}] -> {} (euler {})",
                r.step_kind, r.relationship, r.signature, r.euler
            );
        }
        let end = trace.final_signature();
        assert!(end.is_reduced());
        // every step but the end cut doubles the Euler characteristic
        let doublings = trace
            .steps
            .iter()
            .filter(|s| s.kind != StepKind::EndCut)
            .count();
        assert_eq!(
            end.orbifold_euler(),
            sig.orbifold_euler().scale(1 << doublings)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("reduction example");
}
