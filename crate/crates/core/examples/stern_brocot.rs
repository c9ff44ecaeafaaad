use friezes::modular::{stern_word, word_to_matrix};
use friezes::{rl_word_from_fraction, stern_brocot_locate, stern_brocot_sequence, ExtRational};

fn main() {
    for k in 0..=3 {
        let seq = stern_brocot_sequence(k);
        println!("{k}: {}", seq.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
    }
    println!();
    for s in ["2", "4/3", "7/5", "355/113"] {
        let x: ExtRational = s.parse().unwrap();
        let loc = stern_brocot_locate(&x).unwrap();
        let path = rl_word_from_fraction(&x).unwrap();
        let word = stern_word(&x).unwrap();
        println!(
            "{x:>8}: depth {:>2}, between {} and {}, path {}, matrix {}",
            loc.depth,
            loc.left,
            loc.right,
            path,
            word_to_matrix(&word)
        );
    }
}
