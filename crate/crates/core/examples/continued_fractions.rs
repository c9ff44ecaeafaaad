//! Positive and negative expansions of p/q and the matrices behind them.
//!
//! `cargo run --example continued_fractions -- 7/5`

use friezes::contfrac::zigzag_convergents;
use friezes::{
    bamboo_triangulation, convergents_negative, convergents_positive, expand_negative, expand_positive,
    matrix_negative, matrix_positive, positive_to_negative, quiddity_of, ExtRational, Mat2,
};

fn show(xs: &[ExtRational]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "7/5".into());
    let x: ExtRational = arg.parse().expect("a fraction p/q");
    let pos = expand_positive(&x).expect("p/q > 1");
    let neg = expand_negative(&x).unwrap();
    println!("{x} = {pos} = {neg}");
    println!("converted: {}", positive_to_negative(&pos));
    println!("positive convergents: {}", show(&convergents_positive(&pos)));
    println!("negative convergents: {}", show(&convergents_negative(&neg)));

    let mp = matrix_positive(pos.coeffs());
    let m = matrix_negative(neg.coeffs());
    println!("M+ = {mp}");
    println!("M  = {m}");
    println!("M+ == M R: {}", mp == m * Mat2::r());

    let b = bamboo_triangulation(&pos).unwrap();
    println!("\nbamboo on {} vertices, quiddity {}", b.n(), quiddity_of(&b.triangulation));
    println!("labels {}", show(&b.labels));
    println!("zigzag {}", show(&zigzag_convergents(&b.triangulation).unwrap()));
}
