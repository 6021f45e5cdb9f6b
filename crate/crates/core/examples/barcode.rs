//! Encodes text as Code 128 set B and prints the bars as ASCII art.
//!
//! Run with `cargo run --example barcode -- 1915ca56a314`.

use brickforge::export::encode_code128;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "A1".into());
    let code = encode_code128(&text)?;
    println!("values {:?} checksum {}", code.values, code.checksum);
    println!("{} modules", code.total_modules());
    let mut line = String::new();
    for (i, w) in code.module_widths().iter().enumerate() {
        let mark = if i % 2 == 0 { '#' } else { ' ' };
        line.extend(std::iter::repeat_n(mark, usize::from(*w)));
    }
    for _ in 0..4 {
        println!("{line}");
    }
    Ok(())
}
