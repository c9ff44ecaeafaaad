//! Quiddities of 3d-dissections: `M(c) = -I` with an even number of
//! even-sided cells and `+I` otherwise.

use friezes::modular::{check_ovsienko_sign, dissection_quiddity, expected_verdict, insert_three_ones};
use friezes::{verify_quiddity_identity, Dissection3d};
use num_bigint::BigInt;

fn main() {
    let cases = [
        (6, vec![vec![1, 2, 3, 4, 5, 6]]),
        (7, vec![vec![1, 2, 3, 4, 5, 6], vec![6, 7, 1]]),
        (9, vec![(1..=9).collect()]),
        (10, vec![vec![1, 2, 3, 4, 5, 6], vec![1, 6, 7, 8, 9, 10]]),
    ];
    for (n, cells) in cases {
        let d = Dissection3d::new(n, cells).unwrap();
        let c = dissection_quiddity(&d);
        let shown: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        println!(
            "n = {n:>2}, cells {:?}: quiddity ({}) gives {}, predicted {}, agree {}",
            d.cells(),
            shown.join(","),
            verify_quiddity_identity(&c),
            expected_verdict(&d),
            check_ovsienko_sign(&d)
        );
    }

    let c: Vec<BigInt> = [1, 2, 2, 1, 3].iter().map(|&x| BigInt::from(x)).collect();
    let flipped = insert_three_ones(&c, 2).unwrap();
    println!("\n{:?} -> {}", c, verify_quiddity_identity(&c));
    println!("{:?} -> {}", flipped, verify_quiddity_identity(&flipped));
}
