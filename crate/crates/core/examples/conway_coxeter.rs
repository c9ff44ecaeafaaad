//! Triangulations of small polygons and the friezes they give.

use friezes::triangulation::{admissible_paths_count, dual_tree};
use friezes::{catalan_count, enumerate_triangulations, frieze_from_quiddity, quiddity_of, triangulation_from_quiddity, Quiddity};

fn main() {
    for n in 3..=9 {
        let all = enumerate_triangulations(n);
        let closed = all
            .iter()
            .filter(|t| frieze_from_quiddity(&quiddity_of(t)).map(|f| f.order() == n).unwrap_or(false))
            .count();
        println!("n = {n}: {} triangulations (Catalan {}), {closed} integer friezes", all.len(), catalan_count(n));
    }

    let q: Quiddity = "4,2,1,3,2,2,1".parse().unwrap();
    let t = triangulation_from_quiddity(&q).unwrap();
    println!("\nquiddity {q}");
    println!("diagonals {:?}", t.diagonals());
    println!("paths from 7 to 3: {}", admissible_paths_count(&t, 7, 3).unwrap());
    print!("{}", frieze_from_quiddity(&q).unwrap().to_text());
    print!("{}", dual_tree(&t).to_dot());
}
