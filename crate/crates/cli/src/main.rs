fn main() {
    println!("k3rm");
}
