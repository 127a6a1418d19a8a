#include <cstdio>

int main() {
    std::puts("qweyl: subcommands pending");
    return 1;
}
