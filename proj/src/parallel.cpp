#include "cobschur/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace cobschur {

int worker_count() {
	int n = static_cast<int>(std::thread::hardware_concurrency());
	if (n <= 0)
		n = 1;
	if (const char* env = std::getenv("COBSCHUR_THREADS")) {
		try {
			int cap = std::stoi(env);
			if (cap >= 1)
				n = std::min(n, cap);
		} catch (const std::exception&) {
		}
	}
	return n;
}

void parallel_slices(int count, const std::function<void(int, int, int)>& body) {
	int workers = std::min(worker_count(), std::max(count, 1));
	if (workers <= 1 || count < 2) {
		body(0, 0, count);
		return;
	}
	std::vector<std::thread> threads;
	std::vector<std::exception_ptr> errors(workers);
	for (int w = 0; w < workers; ++w) {
		int begin = static_cast<int>(static_cast<long>(count) * w / workers);
		int end = static_cast<int>(static_cast<long>(count) * (w + 1) / workers);
		threads.emplace_back([&, w, begin, end] {
			try {
				body(w, begin, end);
			} catch (...) {
				errors[w] = std::current_exception();
			}
		});
	}
	for (auto& t : threads)
		t.join();
	for (auto& e : errors)
		if (e)
			std::rethrow_exception(e);
}

}  // namespace cobschur
