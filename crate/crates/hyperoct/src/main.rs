fn main() {
    // Dying quietly on a closed pipe (e.g. `hyperoct table1 --n 9 | head`)
    // beats a panic from println.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(hyperoct::cli::main_entry());
}
