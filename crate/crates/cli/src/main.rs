fn main() {
    println!("stsp: not yet wired");
}
