#include "semiq/linalg.hpp"

namespace semiq {

int bareiss_rank(std::vector<std::vector<ZPoly>> a) {
    if (a.empty()) return 0;
    const int n = static_cast<int>(a.size());
    const int m = static_cast<int>(a[0].size());
    ZPoly prev = ZPoly::constant(Int(1));
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i) {
            if (!a[i][c].is_zero()) {
                if (piv < 0 || a[i][c].degree() < a[piv][c].degree()) piv = i;
            }
        }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = r + 1; i < n; ++i) {
            for (int j = c + 1; j < m; ++j) {
                ZPoly t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                a[i][j] = t.is_zero() ? ZPoly() : t.exact_div(prev);
            }
            a[i][c] = ZPoly();
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

} // namespace semiq
