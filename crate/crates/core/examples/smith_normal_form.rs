// Smith normal form over the integers, with the unimodular transforms that
// certify it.

use std::error::Error;

use orbifold::group::{smith_normal_form, IntegerMatrix};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let matrices = [
        IntegerMatrix::from_rows(2, &[[2, 4], [6, 8]]),
        IntegerMatrix::from_rows(3, &[[2, 0, 0], [0, 3, 0], [0, 0, 5]]),
        IntegerMatrix::from_rows(3, &[[4, 6, 10], [6, 9, 15], [2, 3, 5]]),
    ];
    for m in &matrices {
        let smith = smith_normal_form(m);
        smith.verify(m)?;
        let diag: Vec<String> = smith.diagonal.iter().map(|d| d.to_string()).collect();
        println!("{m}");
        println!("  invariant factors [{}]", diag.join(", "));
        println!("  left  {}", smith.left_transform);
        println!("  right {}", smith.right_transform);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("smith example");
}
