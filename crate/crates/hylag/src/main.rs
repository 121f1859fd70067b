fn main() { println!("{}", hylag::placeholder()); }
