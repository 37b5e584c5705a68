// Emits the capacity-threshold curves for a 100-user system at several cache
// sizes, one CSV block per cache parameter. Feed the output to any plotter to
// see how smaller caches tolerate weaker links.

#include <iostream>

#include <layercast/analysis.hpp>
#include <layercast/serialize.hpp>

namespace lc = layercast;

int main() {
    const int K = 100;
    for (int t : {1, 10, 40}) {
        lc::SystemConfig cfg = lc::validate_config(K, t, K);
        std::cout << "# t = " << t << " (cache fraction " << cfg.gamma().to_fraction_string()
                  << ")\n"
                  << lc::thresholds_csv(lc::thresholds(cfg)) << "\n";
    }
    return 0;
}
