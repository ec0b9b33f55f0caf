// Writes the frozen oracle tables under tests/data.
#include "oracles.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: gen_golden <dir>\n";
        return 2;
    }
    using namespace oracle;
    // one search from the base edge; bounded entries are enough since shortest routes only shrink entries
    const LL bound = 50;
    Edge base = edge({0, 1}, {1, 0});
    std::map<Edge, int> dist{{base, 0}};
    std::deque<Edge> queue{base};
    while (!queue.empty()) {
        Edge e = queue.front();
        queue.pop_front();
        for (const Edge& f : slides(e)) {
            bool small = true;
            for (Frac x : {f.first, f.second})
                small = small && std::llabs(x.first) <= bound && x.second <= bound;
            if (small && dist.emplace(f, dist[e] + 1).second)
                queue.push_back(f);
        }
    }
    std::ofstream out(std::string(argv[1]) + "/slide_lengths.txt");
    std::size_t k = 0;
    for (const auto& [e, d] : dist) {
        if (k++ % 37 != 0)
            continue;
        out << e.first.first << " " << e.first.second << " " << e.second.first << " " << e.second.second << " " << d
            << "\n";
    }
    return 0;
}
