fn main() { println!("cherednik"); }
