//! Residue-class constant weight codes with minimum distance 4.

use mcbc::combinat::binom64;
use mcbc::constructions::graham_sloane_cwc;

fn main() -> mcbc::Result<()> {
    println!("{:>3} {:>3} {:>6} {:>8}", "m", "w", "size", "C(m,w)/m");
    for m in [6, 8, 10, 12] {
        for w in 2..=m / 2 {
            let code = graham_sloane_cwc(m, w)?;
            println!(
                "{m:>3} {w:>3} {:>6} {:>8.1}",
                code.len(),
                binom64(m, w) as f64 / m as f64
            );
        }
    }
    let code = graham_sloane_cwc(7, 3)?;
    println!("(7, 3) supports: {:?}", code.supports());
    println!("{}", serde_json::to_string(&code).expect("serializable"));
    Ok(())
}
