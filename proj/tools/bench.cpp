// Serial vs OpenMP timings for the hot kernels: lattice enumeration, the
// per-subgroup classification scan, and a catalog scan. Also checks that
// both paths produce identical results.

#include <chrono>
#include <cstdio>

#include "grouplat/catalog.hpp"
#include "grouplat/report_json.hpp"
#include "grouplat/verify.hpp"

using namespace grouplat;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

template <class F>
double timed(F&& f) {
    const auto t0 = clock_type::now();
    f();
    return ms_since(t0);
}

void row(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s %10.1f ms %10.1f ms   x%.2f   results %s\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "equal" : "DIFFER");
}

}  // namespace

int main() {
    std::printf("%d hardware threads\n", hardware_threads());
    std::printf("%-28s %13s %13s\n", "kernel", "serial", "openmp");

    {
        const GroupTable g = build_group_spec("dihedral:192");
        SubgroupLattice ls, lp;
        const double ts = timed([&] { ls = enumerate_subgroups(g, {{}, Exec::serial}); });
        const double tp = timed([&] { lp = enumerate_subgroups(g, {{}, Exec::parallel}); });
        bool equal = ls.size() == lp.size();
        for (int i = 0; equal && i < ls.size(); ++i)
            if (!(ls.at(i).members == lp.at(i).members)) equal = false;
        row("lattice dihedral:192", ts, tp, equal);

        ClassificationScan ss, sp;
        const double cs = timed([&] { ss = classify_all_subgroups(g, ls, Exec::serial); });
        const double cp = timed([&] { sp = classify_all_subgroups(g, lp, Exec::parallel); });
        equal = ss.permutable == sp.permutable && ss.modular == sp.modular &&
                ss.subnormal == sp.subnormal && ss.defect == sp.defect;
        row("classify dihedral:192", cs, cp, equal);
    }

    {
        const std::vector<std::string> specs = builtin_catalog(40, 120);
        VerifyOptions serial_opts, parallel_opts;
        serial_opts.exec = Exec::serial;
        parallel_opts.exec = Exec::parallel;
        ScanReport rs, rp;
        const double ts = timed([&] { rs = scan_catalog(specs, serial_opts); });
        const double tp = timed([&] { rp = scan_catalog(specs, parallel_opts); });
        const bool equal = emit_report(make_document(rs)) == emit_report(make_document(rp));
        row("scan catalog(40,120)", ts, tp, equal);
    }
    return 0;
}
