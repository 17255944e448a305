//! Serve multiset requests from a five-server layout and check it both ways.
//!
//! Run with `cargo run --example retrieval`.

use mcbc::{
    serve_request, verify_exhaustive, verify_multiset_hall, CodeParams, McbcCode, MultisetRequest,
};

fn main() -> mcbc::Result<()> {
    let code = McbcCode::from_servers(
        5,
        vec![
            vec![1, 3, 5],
            vec![1, 4, 5],
            vec![2, 3, 5],
            vec![2, 4, 5],
            vec![3, 4, 5],
        ],
    )?;
    println!("n = {}, m = {}, N = {}", code.n(), code.m(), code.storage());
    for (i, block) in code.item_view().blocks().iter().enumerate() {
        println!("item {} on servers {:?}", i + 1, block);
    }

    let params = CodeParams::new(5, 5, 5, 1, 2)?;
    let hall = verify_multiset_hall(code.item_view(), 5, 2)?;
    let exhaustive = verify_exhaustive(&code, &params)?;
    println!(
        "hall condition: {}, every request: {}",
        hall.valid, exhaustive.valid
    );

    for text in ["3,3,4,4,5", "1,1,2,2,5", "5,5"] {
        let request: MultisetRequest = text.parse()?;
        match serve_request(&code, &request, 1)? {
            Some(assignment) => {
                let reads: Vec<String> =
                    assignment.reads.iter().map(|d| format!("{d:?}")).collect();
                println!("{text}: {}", reads.join(" "));
            }
            None => println!("{text}: infeasible"),
        }
    }

    // Item 5 three times is outside r = 2; the code may still happen to serve it.
    let request: MultisetRequest = "5,5,5".parse()?;
    println!(
        "5,5,5 within r = 2: {}",
        request.check_against(&params).is_ok()
    );
    println!(
        "5,5,5 served anyway: {}",
        serve_request(&code, &request, 1)?.is_some()
    );
    Ok(())
}
