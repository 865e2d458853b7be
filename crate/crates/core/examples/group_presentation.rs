// Presentations of orbifold groups and their abelianizations.

use std::error::Error;

use orbifold::group::{abelianization, presentation_of_closed};
use orbifold::{reduce_to_closed, Signature};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for text in [
        "O;g=1",
        "O;g=0;cones=2,2,2",
        "O;g=0;cones=2,3,7",
        "O;g=2;cones=4,6",
        "N;g=3",
    ] {
        let sig: Signature = text.parse()?;
        let trace = reduce_to_closed(&sig);
        let reduced = trace.final_signature();
        let pres = presentation_of_closed(reduced)?;
        let ab = abelianization(&pres);
        println!("{sig} ~> {reduced}");
        println!("  group:         {pres}");
        println!("  abelianized:   {ab}");
        assert_eq!(ab.free_rank, 2 * reduced.genus() as usize);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("presentation example");
}
