//! Continuants three ways, and the classical identities on a random sample.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use friezes::continuants::{
    check_euler_identity, check_lewis_carroll, check_unimodularity_identity, enumerate_morse_codes, IntMatrix,
};
use friezes::{continuant, continuant_bruteforce, continuant_determinant, positive_continuant};

fn main() {
    let a: Vec<BigInt> = [2, 1, 4, 2].iter().map(|&x| BigInt::from(x)).collect();
    println!("V(2,1,4,2) by recurrence   = {}", continuant(&a));
    println!("V(2,1,4,2) by Morse codes  = {}", continuant_bruteforce(&a).unwrap());
    println!("V(2,1,4,2) by determinant  = {}", continuant_determinant(&a));
    println!("K(2,1,4,2)                 = {}", positive_continuant(&a));

    println!("\nMorse codes on 4 points:");
    for code in enumerate_morse_codes(4).unwrap() {
        println!("  {code:<10} weight {}", code.weight(&a));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut ok = 0;
    for _ in 0..1000 {
        let a: Vec<BigInt> = (0..8).map(|_| BigInt::from(rng.gen_range(-5..=5))).collect();
        let l = rng.gen_range(0..4);
        ok += [
            check_unimodularity_identity(&a),
            check_euler_identity(&a, 3, l, 4).unwrap(),
            check_lewis_carroll(&IntMatrix::tridiagonal(&a)).unwrap(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
    }
    println!("\n{ok} of 3000 identity checks hold");
}
