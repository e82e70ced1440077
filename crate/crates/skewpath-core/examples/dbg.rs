// debug: find tables where min_path_cover or descent fails
use skewpath_core::oracle;
use skewpath_core::hamilton;
use skewpath_core::toughness;

fn main() {
    for t in oracle::enumerate_tables(3, 3, 6) {
        if t.is_empty() { continue; }
        let result = std::panic::catch_unwind(|| hamilton::min_path_cover(&t));
        match result {
            Ok(Ok(c)) => {
                if c.len() != toughness::path_cover_number(&t) {
                    println!("SIZE MISMATCH {:?} got {} want {}", t, c.len(), toughness::path_cover_number(&t));
                }
            }
            Ok(Err(e)) => println!("ERR {:?}: {}", t, e),
            Err(_) => { println!("PANIC {:?}", t); }
        }
    }
    println!("done");
}
