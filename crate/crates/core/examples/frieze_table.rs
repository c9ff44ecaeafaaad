//! Build a frieze from its second row and print it staggered.
//!
//! `cargo run --example frieze_table -- 2,1,4,2,1,3,2`

use friezes::frieze::{check_glide_symmetry, check_unimodularity, minimal_period, parse_rational_sequence};
use friezes::{build_frieze, FriezeBuild};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2,1,4,2,1,3,2".into());
    let row = match parse_rational_sequence(&arg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    match build_frieze(&row, 64) {
        Ok(FriezeBuild::Closed(f)) => {
            print!("{}", f.to_text());
            println!();
            println!("order {}, period {}", f.order(), minimal_period(&f));
            println!("unimodular: {}", check_unimodularity(&f));
            println!("glide symmetric: {}", check_glide_symmetry(&f));
            if let Some(q) = f.quiddity() {
                println!("integral frieze with quiddity {q}");
            }
        }
        Ok(FriezeBuild::NonClosing(prefix)) => {
            print!("{}", prefix.to_text());
            println!("no row of ones in the first {} rows", prefix.max_rows);
        }
        Err(e) => println!("{e}"),
    }
}
