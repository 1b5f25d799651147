// Prints zeta(2k)/pi^(2k) for the first few k from the recurrence, next to
// Euler's Bernoulli-number formula, and zeta(2k) to 30 digits.

#include <iostream>

#include "evenzeta/bernoulli.hpp"
#include "evenzeta/zeta_recurrence.hpp"

int main() {
    evenzeta::ZetaEvenTable table;
    for (std::size_t k = 1; k <= 8; ++k) {
        std::cout << "zeta(" << 2 * k << ") = " << table.ratio(k) << " pi^" << 2 * k
                  << "  [euler: " << evenzeta::zeta_even_via_euler(k) << "]  = "
                  << evenzeta::zeta_even_decimal(k, 30, table) << '\n';
    }
}
