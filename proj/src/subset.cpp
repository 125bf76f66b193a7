#include "stiefel/subset.hpp"

#include <charconv>

#include "stiefel/error.hpp"

namespace stiefel {

long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::vector<Subset> combinations(int n, int k)
{
    std::vector<Subset> out;
    if (k < 0 || k > n)
        return out;
    Subset cur(k);
    for (int i = 0; i < k; ++i)
        cur[i] = i;
    while (true)
    {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int t = i + 1; t < k; ++t)
            cur[t] = cur[t - 1] + 1;
    }
    return out;
}

std::size_t combination_rank(const Subset& s, int n)
{
    const int k = static_cast<int>(s.size());
    std::size_t rank = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i)
    {
        for (int v = prev + 1; v < s[i]; ++v)
            rank += static_cast<std::size_t>(binomial(n - 1 - v, k - 1 - i));
        prev = s[i];
    }
    return rank;
}

Subset complement(const Subset& s, int n)
{
    Subset out;
    std::size_t p = 0;
    for (int j = 0; j < n; ++j)
    {
        if (p < s.size() && s[p] == j)
            ++p;
        else
            out.push_back(j);
    }
    return out;
}

std::string format_subset(const Subset& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        if (i)
            out += ',';
        out += std::to_string(s[i] + 1);
    }
    return out;
}

Subset parse_subset(std::string_view text)
{
    Subset out;
    std::size_t pos = 0;
    while (pos < text.size())
    {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 1)
            throw Error("PARSE", "bad subset entry '" + std::string(tok) + "'");
        out.push_back(v - 1);
        pos = comma + 1;
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] <= out[i - 1])
            throw Error("PARSE", "subset '" + std::string(text) + "' is not strictly increasing");
    return out;
}

}   // namespace stiefel
