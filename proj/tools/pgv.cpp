#include <cstdio>
int main() { std::puts("pgv: not wired up yet"); return 1; }
