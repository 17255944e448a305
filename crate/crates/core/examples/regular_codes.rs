//! Regular codes: every server stores the same number of items.

use mcbc::bounds::mu_regular;
use mcbc::constructions::construct_regular;
use mcbc::{verify_exhaustive, CodeParams};

fn main() -> mcbc::Result<()> {
    let (k, m) = (4, 6);
    for n in 1..=9 {
        let mu = mu_regular(n, k, m)?;
        let tag = if mu.exact { "exact" } else { "lower bound" };
        print!("n = {n}: load {} ({tag})", mu.value);
        if let Ok(code) = construct_regular(n, k, m) {
            let params = CodeParams::new(n, k, m, 1, k)?;
            let valid = verify_exhaustive(&code, &params)?.valid;
            print!("  loads {:?}, valid {valid}", code.server_loads());
        }
        println!();
    }
    Ok(())
}
