#include <cstdio>

int main() {
    std::fprintf(stderr, "morseforge: command-line interface not wired up yet\n");
    return 1;
}
