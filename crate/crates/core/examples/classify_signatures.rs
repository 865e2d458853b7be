// Classify a handful of orbifolds: Euler characteristic, good or bad,
// finite or infinite group, and geometry.

use std::error::Error;

use orbifold::{classify, theorem_check, Signature};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let examples = [
        "O;g=0;cones=2,3,5",     // icosahedral: spherical, order 60
        "O;g=0;cones=2,3,6",     // Euclidean wallpaper group
        "O;g=0;cones=2,3,7",     // the smallest hyperbolic triangle group
        "O;g=0;cones=5",         // teardrop: bad
        "O;g=0;cones=2,3",       // spindle with unequal orders: bad
        "N;g=1;cones=3",         // projective plane with a cone point
        "O;g=0;bdry=r(2,2,2,2)", // reflector quadrilateral
        "O;g=1;pun=1",           // punctured torus
    ];
    for text in examples {
        let sig: Signature = text.parse()?;
        let c = classify(&sig);
        let order = c.group_order.map_or("-".to_string(), |o| o.to_string());
        println!(
            "{:<24} euler {:>7}  good {:<5}  finite {:<5}  order {:>3}  {}",
            c.signature.to_string(),
            c.euler.to_string(),
            c.good,
            c.group_finite,
            order,
            c.geometry
        );
        assert!(theorem_check(&sig).passed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("classification example");
}
