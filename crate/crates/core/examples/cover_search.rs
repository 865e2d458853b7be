// Search for finite manifold covers as permutation representations, and
// verify them independently.

use std::error::Error;

use orbifold::{manifold_cover_search, verify_witness, SearchOptions, Signature};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (text, max_degree) in [
        ("O;g=0;cones=2,2,2,2", 12),
        ("O;g=0;cones=3,3,3", 12),
        ("O;g=0;cones=2,3,5", 60),
        ("O;g=0;cones=2,3,7", 84),
        ("O;g=0;cones=2,3", 12),
    ] {
        let sig: Signature = text.parse()?;
        let search = manifold_cover_search(&sig, SearchOptions::canonical(max_degree))?;
        match &search.witness {
            Some(w) => {
                assert!(verify_witness(&sig, w)?.is_valid());
                println!(
                    "{sig}: degree {} cover of genus {}",
                    w.degree, w.cover_genus
                );
                for (i, x) in w.cone_images.iter().enumerate().filter(|_| w.degree <= 12) {
                    println!("  x{} -> {x}", i + 1);
                }
            }
            None => println!(
                "{sig}: no manifold cover (tried degrees {:?})",
                search.schedule
            ),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cover search example");
}
