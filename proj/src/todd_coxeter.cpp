#include "unitforge/todd_coxeter.hpp"

#include <deque>
#include <stdexcept>

namespace unitforge {

namespace {

// Letters: generator i forward = 2i, inverse = 2i+1.
int inverse_letter(int l) { return l ^ 1; }

class Enumerator {
public:
    Enumerator(int ngens, std::vector<std::vector<int>> relators, int max_cosets)
        : nletters_(2 * ngens), relators_(std::move(relators)), max_cosets_(max_cosets) {
        new_coset();
    }

    void run() {
        for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
            if (!alive(c)) continue;
            for (const auto& rel : relators_) {
                scan_and_fill(find(c), rel);
                if (!alive(c)) break;
            }
            if (!alive(c)) continue;
            for (int l = 0; l < nletters_; ++l)
                if (get(c, l) < 0) define(find(c), l);
        }
    }

    int live_count() const {
        int n = 0;
        for (int c = 0; c < static_cast<int>(parent_.size()); ++c)
            if (parent_[c] == c) ++n;
        return n;
    }

    int find(int c) const {
        while (parent_[c] != c) c = parent_[c];
        return c;
    }

    int get(int c, int l) const {
        int d = table_[c][l];
        return d < 0 ? -1 : find(d);
    }

    int nletters() const { return nletters_; }

private:
    bool alive(int c) const { return parent_[c] == c; }

    int new_coset() {
        if (static_cast<int>(table_.size()) >= max_cosets_)
            throw std::runtime_error("coset enumeration exceeded the coset limit");
        table_.emplace_back(nletters_, -1);
        parent_.push_back(static_cast<int>(parent_.size()));
        return static_cast<int>(table_.size()) - 1;
    }

    void define(int c, int l) {
        int d = new_coset();
        table_[c][l] = d;
        table_[d][inverse_letter(l)] = c;
    }

    // Record c·l = d, queueing a coincidence on conflict.
    void deduce(int c, int l, int d) {
        int e = get(c, l);
        if (e < 0) {
            table_[c][l] = d;
            int back = get(d, inverse_letter(l));
            if (back < 0)
                table_[d][inverse_letter(l)] = c;
            else if (back != c)
                queue_.emplace_back(back, c);
        } else if (e != d) {
            queue_.emplace_back(e, d);
        }
        process_coincidences();
    }

    void process_coincidences() {
        while (!queue_.empty()) {
            auto [x, y] = queue_.front();
            queue_.pop_front();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);  // keep the smaller index alive
            parent_[y] = x;
            for (int l = 0; l < nletters_; ++l) {
                int d = table_[y][l];
                if (d < 0) continue;
                d = find(d);
                int e = get(x, l);
                if (e < 0) {
                    table_[x][l] = d;
                    int back = get(d, inverse_letter(l));
                    if (back < 0)
                        table_[d][inverse_letter(l)] = x;
                    else if (back != x)
                        queue_.emplace_back(back, x);
                } else if (e != d) {
                    queue_.emplace_back(e, d);
                }
            }
        }
    }

    void scan_and_fill(int c, const std::vector<int>& word) {
        if (word.empty()) return;
        while (true) {
            c = find(c);
            int f = c;
            size_t i = 0;
            while (i < word.size()) {
                int next = get(f, word[i]);
                if (next < 0) break;
                f = next;
                ++i;
            }
            if (i == word.size()) {
                if (f != c) {
                    queue_.emplace_back(f, c);
                    process_coincidences();
                }
                return;
            }
            int b = c;
            size_t j = word.size();
            while (j > i + 1) {
                int prev = get(b, inverse_letter(word[j - 1]));
                if (prev < 0) break;
                b = prev;
                --j;
            }
            if (j == i + 1) {
                // Exactly one gap: closing deduction (may trigger coincidences).
                deduce(f, word[i], b);
                return;
            }
            define(f, word[i]);
        }
    }

    int nletters_;
    std::vector<std::vector<int>> relators_;
    int max_cosets_;
    std::vector<std::vector<int>> table_;
    std::vector<int> parent_;
    std::deque<std::pair<int, int>> queue_;
};

std::vector<int> word_to_letters(const Word& w) {
    std::vector<int> letters;
    for (const auto& [g, e] : w.syllables) {
        int l = e > 0 ? 2 * g : 2 * g + 1;
        for (long k = 0; k < (e > 0 ? e : -e); ++k) letters.push_back(l);
    }
    return letters;
}

}  // namespace

EnumeratedGroup enumerate_presentation(const Presentation& p, int max_cosets) {
    const int ngens = static_cast<int>(p.generators.size());
    std::vector<std::vector<int>> rels;
    rels.reserve(p.relators.size());
    for (const Word& w : p.relators) rels.push_back(word_to_letters(w));

    Enumerator en(ngens, rels, max_cosets);
    en.run();

    // Canonical renumbering: breadth-first from the identity over the
    // generators in declaration order.
    const int n = en.live_count();
    std::vector<std::pair<int, int>> via(n, {-1, -1});  // (parent canon index, generator)
    std::vector<int> coset_of_canon(n, -1);
    std::vector<int> canon_of;

    auto ensure = [&](int coset) -> int& {
        if (coset >= static_cast<int>(canon_of.size())) canon_of.resize(coset + 1, -1);
        return canon_of[coset];
    };

    int assigned = 0;
    {
        int root = en.find(0);
        ensure(root) = 0;
        coset_of_canon[0] = root;
        assigned = 1;
    }
    for (int head = 0; head < assigned; ++head) {
        int c = coset_of_canon[head];
        for (int g = 0; g < ngens; ++g) {
            int d = en.get(c, 2 * g);
            if (d < 0) throw std::logic_error("coset table incomplete after enumeration");
            if (ensure(d) < 0) {
                ensure(d) = assigned;
                coset_of_canon[assigned] = d;
                via[assigned] = {head, g};
                ++assigned;
            }
        }
    }
    if (assigned != n)
        throw std::logic_error("generators do not reach every coset");

    EnumeratedGroup out;
    out.order = n;
    out.generator_action.assign(n, std::vector<int>(ngens));
    for (int i = 0; i < n; ++i)
        for (int g = 0; g < ngens; ++g)
            out.generator_action[i][g] = canon_of[en.get(coset_of_canon[i], 2 * g)];

    out.element_words.resize(n);
    for (int i = 1; i < n; ++i) {
        out.element_words[i] = out.element_words[via[i].first];
        out.element_words[i].append(via[i].second, 1);
    }

    out.multiplication.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            int z = x;
            for (const auto& [g, e] : out.element_words[y].syllables)
                for (long k = 0; k < e; ++k) z = out.generator_action[z][g];
            out.multiplication[x][y] = z;
        }
    }
    return out;
}

}  // namespace unitforge
