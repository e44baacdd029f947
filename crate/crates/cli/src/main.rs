fn main() {
    println!("proxigraph");
}
